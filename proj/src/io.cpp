#include "motarr/io.hpp"

#include <cctype>
#include <sstream>

#include "motarr/error.hpp"

namespace motarr {

using nlohmann::json;

namespace {

std::string scalar_text(const json& j, const std::string& where, const Field& field)
{
    std::string text;
    if (j.is_string())
        text = j.get<std::string>();
    else if (j.is_number_integer())
        text = std::to_string(j.get<long long>());
    else
        fail(ErrorKind::parse_error, where + ": expected a scalar string");
    try {
        Scalar::parse(field, text);
    } catch (const Error& e) {
        fail(ErrorKind::parse_error, where + ": " + e.what());
    }
    return text;
}

const json& member(const json& j, const char* key, const std::string& where)
{
    auto it = j.find(key);
    if (it == j.end())
        fail(ErrorKind::parse_error, where + ": missing field '" + key + "'");
    return *it;
}

void check_order(const std::vector<std::size_t>& order, std::size_t r)
{
    if (order.size() != r)
        fail(ErrorKind::parse_error, "order: expected a permutation of 1.." + std::to_string(r));
    std::vector<bool> seen(r, false);
    for (auto k : order) {
        if (k < 1 || k > r || seen[k - 1])
            fail(ErrorKind::parse_error, "order: expected a permutation of 1.." + std::to_string(r));
        seen[k - 1] = true;
    }
}

}  // namespace

ArrangementDocument parse_document(const json& j)
{
    if (!j.is_object())
        fail(ErrorKind::parse_error, "document: expected an object");
    ArrangementDocument doc;
    const json& field = member(j, "field", "document");
    if (!field.is_string())
        fail(ErrorKind::parse_error, "field: expected a string");
    doc.field = field.get<std::string>();
    std::optional<Field> parsed;
    try {
        parsed = Field::parse(doc.field);
    } catch (const Error& e) {
        fail(ErrorKind::parse_error, std::string("field: ") + e.what());
    }
    const Field f = *parsed;
    const json& dim = member(j, "dimension", "document");
    if (!dim.is_number_unsigned())
        fail(ErrorKind::parse_error, "dimension: expected a non-negative integer");
    doc.dimension = dim.get<std::size_t>();
    const json& hs = member(j, "hyperplanes", "document");
    if (!hs.is_array())
        fail(ErrorKind::parse_error, "hyperplanes: expected an array");
    for (std::size_t i = 0; i < hs.size(); ++i) {
        const std::string where = "hyperplanes[" + std::to_string(i) + "]";
        if (!hs[i].is_object())
            fail(ErrorKind::parse_error, where + ": expected an object");
        ArrangementDocument::Form form;
        form.constant = scalar_text(member(hs[i], "constant", where), where + ".constant", f);
        const json& cs = member(hs[i], "coeffs", where);
        if (!cs.is_array() || cs.size() != doc.dimension)
            fail(ErrorKind::parse_error,
                 where + ".coeffs: expected " + std::to_string(doc.dimension) + " coefficients");
        for (std::size_t k = 0; k < cs.size(); ++k)
            form.coeffs.push_back(scalar_text(cs[k], where + ".coeffs[" + std::to_string(k) + "]", f));
        doc.hyperplanes.push_back(std::move(form));
    }
    if (auto it = j.find("order"); it != j.end() && !it->is_null()) {
        if (!it->is_array())
            fail(ErrorKind::parse_error, "order: expected an array");
        std::vector<std::size_t> order;
        for (const auto& k : *it) {
            if (!k.is_number_unsigned())
                fail(ErrorKind::parse_error, "order: expected positive integers");
            order.push_back(k.get<std::size_t>());
        }
        check_order(order, doc.hyperplanes.size());
        doc.order = std::move(order);
    }
    return doc;
}

ArrangementDocument parse_document_text(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::parse_error, std::string("document: ") + e.what());
    }
    return parse_document(j);
}

json to_json(const ArrangementDocument& doc)
{
    json j;
    j["field"] = doc.field;
    j["dimension"] = doc.dimension;
    j["hyperplanes"] = json::array();
    for (const auto& f : doc.hyperplanes)
        j["hyperplanes"].push_back({{"constant", f.constant}, {"coeffs", f.coeffs}});
    if (doc.order)
        j["order"] = *doc.order;
    return j;
}

ArrangementDocument normalize(const ArrangementDocument& doc)
{
    Field field = Field::parse(doc.field);
    ArrangementDocument out = doc;
    out.field = field.to_string();
    for (auto& f : out.hyperplanes) {
        f.constant = Scalar::parse(field, f.constant).to_string();
        for (auto& c : f.coeffs)
            c = Scalar::parse(field, c).to_string();
    }
    return out;
}

ArrangementDocument document_of(const Arrangement& arr)
{
    ArrangementDocument doc;
    doc.field = arr.field().to_string();
    doc.dimension = arr.dimension();
    for (const auto& h : arr.chosen_forms()) {
        ArrangementDocument::Form f{h.constant.to_string(), {}};
        for (const auto& c : h.coeffs)
            f.coeffs.push_back(c.to_string());
        doc.hyperplanes.push_back(std::move(f));
    }
    return doc;
}

std::vector<std::size_t> parse_order(const std::string& text)
{
    std::vector<std::size_t> order;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            long v = std::stol(item, &used);
            if (v < 1 || item.find_first_not_of(" \t", used) != std::string::npos)
                throw std::invalid_argument(item);
            order.push_back(static_cast<std::size_t>(v));
        } catch (const std::logic_error&) {
            fail(ErrorKind::parse_error, "order: bad entry '" + item + "'");
        }
    }
    return order;
}

Arrangement build(const ArrangementDocument& doc, const std::optional<Field>& field_override,
                  const std::optional<std::vector<std::size_t>>& order_override)
{
    Field field = field_override ? *field_override : Field::parse(doc.field);
    std::vector<Hyperplane> forms;
    for (const auto& f : doc.hyperplanes) {
        Hyperplane h{Scalar::parse(field, f.constant), {}};
        for (const auto& c : f.coeffs)
            h.coeffs.push_back(Scalar::parse(field, c));
        forms.push_back(std::move(h));
    }
    Arrangement arr(field, doc.dimension, forms);
    const auto& order = order_override ? order_override : doc.order;
    if (!order)
        return arr;
    check_order(*order, arr.size());
    std::vector<std::size_t> zero_based;
    for (auto k : *order)
        zero_based.push_back(k - 1);
    return permute(arr, zero_based);
}

namespace {

// Either an affine form or a unit; sums are only formed between affine values.
struct Value {
    bool affine = true;
    Hyperplane form;
    UnitElement unit;
};

class UnitParser {
public:
    UnitParser(const Arrangement& arr, const std::string& text) : arr_(arr), text_(text) {}

    UnitElement run()
    {
        Value v = expr();
        skip();
        if (pos_ != text_.size())
            error("unexpected '" + std::string(1, text_[pos_]) + "'");
        return to_unit(v);
    }

private:
    [[noreturn]] void error(const std::string& what) const
    {
        fail(ErrorKind::parse_error, "unit '" + text_ + "' at column " + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek()
    {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_primary()
    {
        char c = peek();
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }

    Value constant(const Scalar& c) const
    {
        Value v;
        v.form = Hyperplane{c, Vector(arr_.dimension(), arr_.zero())};
        return v;
    }

    static bool is_constant(const Value& v)
    {
        if (!v.affine)
            return false;
        for (const auto& c : v.form.coeffs)
            if (!c.is_zero())
                return false;
        return true;
    }

    UnitElement to_unit(const Value& v) const
    {
        if (!v.affine)
            return v.unit;
        if (is_constant(v)) {
            if (v.form.constant.is_zero())
                fail(ErrorKind::zero_unit, "'" + text_ + "' contains the zero function");
            return unit_constant(arr_, FieldUnit(v.form.constant));
        }
        NormalizedForm nf = normalize_form(v.form.constant, v.form.coeffs);
        for (std::size_t i = 0; i < arr_.size(); ++i) {
            if (arr_.normalized(i) == nf.hyperplane) {
                UnitElement u = unit_generator(arr_, i);
                u.scalar = FieldUnit(nf.scale / arr_.scale(i));
                return u;
            }
        }
        fail(ErrorKind::precondition_violated,
             "'" + v.form.to_string() + "' in '" + text_ + "' is not a unit on the complement");
    }

    // Units that happen to be affine can still take part in sums.
    std::optional<Value> as_affine(const Value& v) const
    {
        if (v.affine)
            return v;
        if (!v.unit.scalar.is_concrete())
            return std::nullopt;
        std::optional<std::size_t> single;
        for (std::size_t i = 0; i < v.unit.exponents.size(); ++i) {
            if (v.unit.exponents[i] == 0)
                continue;
            if (v.unit.exponents[i] != 1 || single)
                return std::nullopt;
            single = i;
        }
        const Scalar& s = v.unit.scalar.value();
        if (!single)
            return constant(s);
        Value out;
        const Hyperplane& h = arr_.chosen(*single);
        out.form.constant = s * h.constant;
        for (const auto& c : h.coeffs)
            out.form.coeffs.push_back(s * c);
        return out;
    }

    Value add(const Value& a, const Value& b, bool subtract)
    {
        auto x = as_affine(a), y = as_affine(b);
        if (!x || !y)
            error("sums must be affine");
        Value out = *x;
        const Scalar sign = subtract ? -arr_.one() : arr_.one();
        out.form.constant += sign * y->form.constant;
        for (std::size_t i = 0; i < out.form.coeffs.size(); ++i)
            out.form.coeffs[i] += sign * y->form.coeffs[i];
        return out;
    }

    Value scaled(const Value& a, const Scalar& s) const
    {
        Value out = a;
        out.form.constant *= s;
        for (auto& c : out.form.coeffs)
            c *= s;
        return out;
    }

    Value unit_value(const UnitElement& u) const
    {
        Value v;
        v.affine = false;
        v.unit = u;
        return v;
    }

    Value multiply(const Value& a, const Value& b) const
    {
        if (is_constant(a) && b.affine)
            return scaled(b, a.form.constant);
        if (is_constant(b) && a.affine)
            return scaled(a, b.form.constant);
        return unit_value(to_unit(a) * to_unit(b));
    }

    Value divide(const Value& a, const Value& b) const
    {
        if (is_constant(b) && a.affine) {
            if (b.form.constant.is_zero())
                fail(ErrorKind::zero_unit, "division by zero in '" + text_ + "'");
            return scaled(a, b.form.constant.inverse());
        }
        return unit_value(to_unit(a) * to_unit(b).inverse());
    }

    Value expr()
    {
        Value v = term();
        for (;;) {
            char c = peek();
            if (c != '+' && c != '-')
                return v;
            ++pos_;
            v = add(v, term(), c == '-');
        }
    }

    Value term()
    {
        Value v = factor();
        for (;;) {
            char c = peek();
            if (c == '*' || c == '/') {
                ++pos_;
                Value w = factor();
                v = c == '*' ? multiply(v, w) : divide(v, w);
            } else if (starts_primary()) {
                v = multiply(v, factor());
            } else {
                return v;
            }
        }
    }

    long exponent()
    {
        bool parens = peek() == '(';
        if (parens)
            ++pos_;
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_ || pos_ - start > 6)
            error("expected a small integer exponent");
        long e = std::stol(text_.substr(start, pos_ - start));
        if (parens) {
            if (peek() != ')')
                error("expected ')'");
            ++pos_;
        }
        return negative ? -e : e;
    }

    Value factor()
    {
        char c = peek();
        if (c == '-' || c == '+') {
            ++pos_;
            Value v = factor();
            return c == '-' ? scaled_or_negated(v) : v;
        }
        Value v = primary();
        if (peek() == '^') {
            ++pos_;
            long e = exponent();
            if (is_constant(v) && e >= 0)
                return constant(v.form.constant.pow(e));
            UnitElement u = to_unit(v);
            UnitElement p{u.scalar.pow(e), u.exponents};
            for (auto& k : p.exponents)
                k *= e;
            return unit_value(p);
        }
        return v;
    }

    Value scaled_or_negated(const Value& v) const
    {
        if (v.affine)
            return scaled(v, -arr_.one());
        UnitElement u = v.unit;
        u.scalar = -u.scalar;
        return unit_value(u);
    }

    Value primary()
    {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Value v = expr();
            if (peek() != ')')
                error("expected ')'");
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return constant(Scalar::parse(arr_.field(), text_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            return identifier(text_.substr(start, pos_ - start));
        }
        error(c ? "unexpected '" + std::string(1, c) + "'" : "unexpected end of input");
    }

    static std::optional<std::size_t> numbered(const std::string& name, char prefix)
    {
        if (name.size() < 2 || name[0] != prefix)
            return std::nullopt;
        for (std::size_t i = 1; i < name.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(name[i])))
                return std::nullopt;
        if (name.size() > 4)
            return std::nullopt;
        return std::stoul(name.substr(1));
    }

    Value variable(std::size_t k)
    {
        Value v = constant(arr_.zero());
        v.form.coeffs.at(k) = arr_.one();
        return v;
    }

    Value identifier(const std::string& name)
    {
        const std::size_t n = arr_.dimension();
        if (n <= 3 && name.size() == 1 && name[0] >= 'x' && name[0] <= 'z' &&
            static_cast<std::size_t>(name[0] - 'x') < n)
            return variable(static_cast<std::size_t>(name[0] - 'x'));
        if (auto k = numbered(name, 'x'); k && *k >= 1 && *k <= n)
            return variable(*k - 1);
        if (auto k = numbered(name, 'h'); k && *k >= 1 && *k <= arr_.size())
            return unit_value(unit_generator(arr_, *k - 1));
        if (arr_.field().is_formal())
            return unit_value(unit_constant(arr_, FieldUnit::letter(arr_.one(), name)));
        error("unknown name '" + name + "'");
    }

    const Arrangement& arr_;
    std::string text_;
    std::size_t pos_ = 0;
};

}  // namespace

UnitElement parse_unit(const Arrangement& arr, const std::string& text)
{
    return UnitParser(arr, text).run();
}

std::vector<UnitElement> parse_word(const Arrangement& arr, const std::string& text)
{
    std::vector<UnitElement> out;
    if (text.find_first_not_of(" \t") == std::string::npos)
        return out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ';'))
        out.push_back(parse_unit(arr, item));
    return out;
}

std::string unit_to_string(const Arrangement& arr, const UnitElement& u)
{
    std::ostringstream out;
    out << u.scalar.to_string();
    for (std::size_t i = 0; i < u.exponents.size(); ++i) {
        if (u.exponents[i] == 0)
            continue;
        out << "*(" << arr.chosen(i).to_string() << ")";
        if (u.exponents[i] != 1)
            out << '^' << u.exponents[i];
    }
    return out.str();
}

}  // namespace motarr
