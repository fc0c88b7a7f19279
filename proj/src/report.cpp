#include "motarr/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "motarr/error.hpp"
#include "motarr/motive.hpp"
#include "motarr/os_algebra.hpp"
#include "motarr/relations.hpp"

namespace motarr {

using nlohmann::json;

const std::vector<std::string>& commands()
{
    static const std::vector<std::string> names{"info",     "twists",      "rank",  "basis", "os",
                                                "reduce",   "multiply",    "tame-symbol", "verify"};
    return names;
}

json element_json(const CohomologyElement& x)
{
    json j = json::object();
    for (const auto& [m, c] : x.terms())
        j[subset_string(m)] = c.to_string();
    return j;
}

namespace {

json check(const std::string& algorithm, const std::string& cross_check, const std::string& outcome)
{
    return {{"algorithm", algorithm}, {"cross_check", cross_check}, {"ran", outcome != "not run"}, {"outcome", outcome}};
}

json subsets_json(const std::vector<Subset>& v)
{
    json j = json::array();
    for (Subset s : v)
        j.push_back(subset_string(s));
    return j;
}

std::vector<std::size_t> trimmed(std::vector<std::size_t> v)
{
    while (!v.empty() && v.back() == 0)
        v.pop_back();
    return v;
}

// quotient rank over Z plus rank of L_d over Q must fill every degree
bool ranks_consistent(const Arrangement& arr, const GradedRanks& g)
{
    for (std::size_t d = 0; d < g.ranks.size(); ++d)
        if (g.ranks[d] + g.rational_ranks[d] != degree_monomials(arr.size(), d).size())
            return false;
    return true;
}

// Poincare polynomial against the graded ranks of Lambda Q / L.
std::string rank_cross_check(const Arrangement& arr, const std::vector<std::size_t>& poincare)
{
    GradedRanks g = graded_rank(arr);
    if (trimmed(g.ranks) != trimmed(poincare))
        fail(ErrorKind::cross_check_mismatch, "Tate twists disagree with the graded ranks of Lambda Q/L");
    if (!ranks_consistent(arr, g))
        fail(ErrorKind::cross_check_mismatch, "integer and rational ranks of Lambda Q/L disagree");
    return "os-ranks agree";
}

// Nonempty flats as closed index sets, by codimension.
std::vector<Flat> all_flats(const Arrangement& arr)
{
    auto closure = [&](Subset s) {
        Flat f = flat_of(arr, s);
        for (std::size_t i = 0; i < arr.size(); ++i) {
            if (subset_has(f.indices, i))
                continue;
            Flat g = flat_of(arr, f.indices | bit(i));
            if (!g.is_empty && g.codim == f.codim)
                f.indices |= bit(i);
        }
        return f;
    };
    std::vector<Flat> out{closure(0)};
    std::set<Subset> seen{out[0].indices};
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (std::size_t i = 0; i < arr.size(); ++i) {
            if (subset_has(out[k].indices, i))
                continue;
            Flat g = flat_of(arr, out[k].indices | bit(i));
            if (g.is_empty)
                continue;
            g = closure(g.indices);
            if (seen.insert(g.indices).second)
                out.push_back(g);
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const Flat& a, const Flat& b) {
        return a.codim != b.codim ? a.codim < b.codim : SubsetOrder{}(a.indices, b.indices);
    });
    return out;
}

json unit_list(const Arrangement& arr, const std::vector<UnitElement>& units)
{
    json j = json::array();
    for (const auto& u : units)
        j.push_back(unit_to_string(arr, u));
    return j;
}

Decision decide(const CohomologyElement& a, const CohomologyElement& b)
{
    Decision d = equal(a, b);
    return d == Decision::unknown ? certify_zero(a - b) : d;
}

std::string outcome(Decision d, const std::string& what)
{
    if (d == Decision::nonzero)
        fail(ErrorKind::cross_check_mismatch, what);
    return d == Decision::zero ? "agree" : "undecided";
}

struct Context {
    const RunOptions& options;
    const Arrangement& arr;
    json result = json::object();
    json provenance = json::object();
};

void info(Context& c)
{
    const Arrangement& arr = c.arr;
    json hs = json::array();
    for (const auto& h : arr.chosen_forms())
        hs.push_back(h.to_string());
    c.result["hyperplanes"] = hs;
    c.result["dimension"] = arr.dimension();
    c.result["field"] = arr.field().to_string();
    json cs = json::array();
    bool verified = true;
    for (const auto& dep : circuits(arr)) {
        json lambdas = json::array();
        for (const auto& l : dep.lambdas)
            lambdas.push_back(l.to_string());
        cs.push_back({{"indices", subset_string(dep.indices)}, {"lambdas", lambdas}, {"constant", dep.constant}});
        verified = verified && verify_dependency(arr, dep);
    }
    if (!verified)
        fail(ErrorKind::cross_check_mismatch, "a circuit dependency does not hold");
    c.result["circuits"] = cs;
    json fs = json::array();
    for (const auto& f : all_flats(arr))
        fs.push_back({{"indices", subset_string(f.indices)}, {"codim", f.codim}});
    c.result["flats"] = fs;
    c.result["normal_crossing"] = is_normal_crossing(arr);
    c.provenance["circuits"] =
        check("level-wise minimal dependent sets", "each dependency re-evaluated on the forms", "agree");
    c.provenance["flats"] = check("closure under exact row reduction", "none", "not run");
    c.provenance["normal_crossing"] = check("rank test of the homogenized forms", "none", "not run");
}

void twists(Context& c)
{
    TwistMultiset t = tate_twists(c.arr);
    json tj = json::array();
    for (const auto& [n, m] : t.counts)
        tj.push_back({{"twist", n}, {"multiplicity", m}});
    auto poincare = poincare_polynomial(c.arr);
    c.result["twists"] = tj;
    c.result["poincare"] = poincare;
    c.result["cross_check"] = rank_cross_check(c.arr, poincare);
    c.provenance["twists"] = check("deletion-restriction recursion", "graded ranks of Lambda Q/L", "agree");
}

void rank(Context& c)
{
    auto poincare = poincare_polynomial(c.arr);
    c.result["rank"] = module_rank(c.arr);
    c.result["poincare"] = poincare;
    c.result["cross_check"] = rank_cross_check(c.arr, poincare);
    c.provenance["rank"] = check("deletion-restriction recursion", "graded ranks of Lambda Q/L", "agree");
}

void basis(Context& c)
{
    CohomologyRing ring(c.arr);
    c.result["basis"] = subsets_json(ring.basis());
    c.result["nbc"] = subsets_json(ring.os().nbc());
    c.result["rank"] = ring.basis().size();
    auto poincare = poincare_polynomial(c.arr);
    c.result["cross_check"] = rank_cross_check(c.arr, poincare);
    c.provenance["basis"] = check("deletion-restriction recursion with smallest-index lift",
                                  "unimodular change of basis to the nbc basis", "agree");
    c.provenance["rank"] = check("deletion-restriction recursion", "graded ranks of Lambda Q/L", "agree");
}

void os(Context& c)
{
    GradedRanks g = graded_rank(c.arr);
    json divisors = json::array();
    bool free = true;
    for (const auto& d : g.elementary_divisors) {
        json row = json::array();
        for (const auto& e : d) {
            row.push_back(e.get_str());
            free = free && e == 1;
        }
        divisors.push_back(row);
    }
    c.result["ranks"] = g.ranks;
    c.result["elementary_divisors"] = divisors;
    c.result["free"] = free;
    c.result["generators"] = os_generators(c.arr).size();
    if (!ranks_consistent(c.arr, g))
        fail(ErrorKind::cross_check_mismatch, "integer and rational ranks of L disagree");
    c.provenance["ranks"] = check("Hermite lattice and Smith normal form of L", "rank over Q", "agree");
}

void reduce(Context& c)
{
    CohomologyRing ring(c.arr);
    auto word = parse_word(c.arr, c.options.word);
    auto x = ring.reduce_word(word);
    Rng rng(c.options.seed);
    auto y = ring.reduce_word(word, &rng);
    c.result["word"] = unit_list(c.arr, word);
    c.result["basis"] = element_json(x);
    c.provenance["basis"] = check("circuit straightening and unimodular basis change",
                                  "reduction with a seeded random rule order",
                                  outcome(decide(x, y), "reduction depends on the rule order"));
}

void multiply(Context& c)
{
    CohomologyRing ring(c.arr);
    auto left = parse_word(c.arr, c.options.left), right = parse_word(c.arr, c.options.right);
    auto a = ring.reduce_word(left), b = ring.reduce_word(right);
    auto product = ring.multiply(a, b);
    auto joined = left;
    joined.insert(joined.end(), right.begin(), right.end());
    auto direct = ring.reduce_word(joined);
    c.result["left"] = element_json(a);
    c.result["right"] = element_json(b);
    c.result["basis"] = element_json(product);
    c.provenance["basis"] = check("product of normal forms", "reduction of the concatenated word",
                                  outcome(decide(product, direct), "product disagrees with the joined word"));
}

void tame(Context& c)
{
    const Arrangement& arr = c.arr;
    CohomologyRing ring(arr);
    auto units = parse_word(arr, c.options.word);
    auto pairs = tame_symbol(ring, units);
    json pj = json::array();
    std::map<Subset, FieldUnit> by_flat;
    for (const auto& p : pairs) {
        pj.push_back({{"flat", subset_string(p.flat)}, {"value", p.value.to_string()}});
        by_flat[p.flat] = p.value;
    }
    c.result["word"] = unit_list(arr, units);
    c.result["pairs"] = pj;
    std::string status = "not run";
    if (arr.dimension() == 1 && units.size() == 2) {
        // phi_i = a_i (x - p_i)
        std::vector<Scalar> points;
        for (const auto& h : arr.chosen_forms())
            points.push_back(-h.constant / h.coeffs[0]);
        auto monic = [&](const UnitElement& u) {
            UnitElement v = u;
            for (std::size_t i = 0; i < arr.size(); ++i)
                v.scalar = v.scalar * FieldUnit(arr.chosen(i).coeffs[0].pow(u.exponents[i]));
            return v;
        };
        std::map<Subset, FieldUnit> line;
        for (const auto& p : tame_symbol_line(points, monic(units[0]), monic(units[1])))
            for (std::size_t i = 0; i < points.size(); ++i)
                if (points[i] == p.point)
                    line[bit(i)] = p.value;
        if (line != by_flat)
            fail(ErrorKind::cross_check_mismatch, "tame symbol disagrees with the valuation formula");
        status = "agree";
    }
    c.provenance["pairs"] = check("Gysin residues of the top-degree normal form",
                                  "closed valuation formula on the punctured line", status);
}

void verify(Context& c)
{
    CohomologyRing ring(c.arr);
    Rng rng(c.options.seed);
    auto r = relation_suite(ring, rng, c.options.trials);
    c.result["trials"] = c.options.trials;
    c.result["instances"] = r.instances;
    c.result["failures"] = r.failed();
    c.result["failures_by_kind"] = r.failures;
    c.result["samples"] = r.samples;
    c.result["certified"] = r.certified;
    c.provenance["failures"] = check("seeded relation suite reduced to normal form",
                                     "residue invariants of K_*(Q) where the normal form is not syntactically empty",
                                     r.certified ? "agree" : "not run");
}

}  // namespace

json run(const RunOptions& options, const ArrangementDocument& doc)
{
    const auto& names = commands();
    if (std::find(names.begin(), names.end(), options.command) == names.end())
        fail(ErrorKind::parse_error, "unknown command '" + options.command + "'");
    Arrangement arr = build(doc, options.backend, options.order);
    Context c{options, arr};
    const std::string& cmd = options.command;
    json flags = json::object();
    if (options.backend)
        flags["backend"] = options.backend->to_string();
    if (options.order)
        flags["order"] = *options.order;
    if (cmd == "reduce" || cmd == "verify")
        flags["seed"] = options.seed;
    if (cmd == "verify")
        flags["trials"] = options.trials;
    if (cmd == "reduce" || cmd == "tame-symbol")
        flags["word"] = options.word;
    if (cmd == "multiply") {
        flags["left"] = options.left;
        flags["right"] = options.right;
    }

    if (cmd == "info")
        info(c);
    else if (cmd == "twists")
        twists(c);
    else if (cmd == "rank")
        rank(c);
    else if (cmd == "basis")
        basis(c);
    else if (cmd == "os")
        os(c);
    else if (cmd == "reduce")
        reduce(c);
    else if (cmd == "multiply")
        multiply(c);
    else if (cmd == "tame-symbol")
        tame(c);
    else
        verify(c);

    json report;
    report["command"] = cmd;
    report["flags"] = flags;
    report["input"] = to_json(normalize(doc));
    report["result"] = c.result;
    report["provenance"] = c.provenance;
    return report;
}

std::string render_text(const json& report)
{
    std::ostringstream out;
    out << "command: " << report.at("command").get<std::string>() << '\n';
    for (const auto& [key, value] : report.at("result").items())
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    for (const auto& [key, value] : report.at("provenance").items())
        out << "check " << key << ": " << value.at("outcome").get<std::string>() << " ("
            << value.at("algorithm").get<std::string>() << "; " << value.at("cross_check").get<std::string>()
            << ")\n";
    return out.str();
}

}  // namespace motarr
