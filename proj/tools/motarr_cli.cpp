#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "motarr/error.hpp"
#include "motarr/report.hpp"

namespace {

int exit_code(motarr::ErrorKind kind)
{
    switch (kind) {
    case motarr::ErrorKind::parse_error: return 1;
    case motarr::ErrorKind::cross_check_mismatch: return 3;
    default: return 2;
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Motivic cohomology of hyperplane arrangement complements"};
    app.require_subcommand(1, 1);

    std::string input, format = "json", order, backend;
    motarr::RunOptions options;
    app.add_option("--input", input, "arrangement document (JSON), '-' for stdin")->required();
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--order", order, "1-based hyperplane permutation, e.g. 3,1,2");
    app.add_option("--backend", backend, "fp:<p>, q or formal");
    app.add_option("--seed", options.seed, "random seed");
    app.add_option("--trials", options.trials, "relation instances for verify");
    app.add_option("--word", options.word, "units separated by ';', e.g. \"x; x-1\"");
    app.add_option("--left", options.left, "left factor word for multiply");
    app.add_option("--right", options.right, "right factor word for multiply");
    app.fallthrough();
    for (const auto& name : motarr::commands())
        app.add_subcommand(name);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    options.command = app.get_subcommands().front()->get_name();

    try {
        std::stringstream text;
        if (input == "-") {
            text << std::cin.rdbuf();
        } else {
            std::ifstream in(input);
            if (!in)
                motarr::fail(motarr::ErrorKind::parse_error, "cannot read '" + input + "'");
            text << in.rdbuf();
        }
        auto doc = motarr::parse_document_text(text.str());
        if (!order.empty())
            options.order = motarr::parse_order(order);
        if (!backend.empty()) {
            try {
                options.backend = motarr::Field::parse(backend);
            } catch (const motarr::Error& e) {
                motarr::fail(motarr::ErrorKind::parse_error, std::string("--backend: ") + e.what());
            }
        }
        auto report = motarr::run(options, doc);
        if (format == "json")
            std::cout << report.dump(2) << '\n';
        else
            std::cout << motarr::render_text(report);
        if (options.command == "verify" && report["result"]["failures"].get<std::size_t>() > 0)
            return 3;
        return 0;
    } catch (const motarr::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    }
}
