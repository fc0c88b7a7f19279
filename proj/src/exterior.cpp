#include "motarr/exterior.hpp"

#include <sstream>

namespace motarr {

std::vector<std::size_t> subset_indices(Subset s)
{
    std::vector<std::size_t> out;
    while (s) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
        s &= s - 1;
    }
    return out;
}

Subset subset_from(const std::vector<std::size_t>& indices)
{
    Subset s = 0;
    for (auto i : indices)
        s |= bit(i);
    return s;
}

std::string subset_string(Subset s)
{
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (auto i : subset_indices(s)) {
        out << (first ? "" : ",") << i + 1;
        first = false;
    }
    out << '}';
    return out.str();
}

int wedge_sign(Subset a, Subset b)
{
    if (a & b)
        return 0;
    int inversions = 0;
    for (auto t : subset_indices(b))
        inversions += subset_size(a & ~(bit(t + 1) - 1));
    return inversions % 2 ? -1 : 1;
}

bool SubsetOrder::operator()(Subset a, Subset b) const
{
    int sa = subset_size(a), sb = subset_size(b);
    if (sa != sb)
        return sa < sb;
    // equal size: compare sorted index lists; the first differing index decides
    Subset diff = a ^ b;
    if (!diff)
        return false;
    Subset lowest = diff & (~diff + 1);
    return (a & lowest) != 0;
}

ExteriorElement ExteriorElement::monomial(Subset s, const mpz_class& c)
{
    ExteriorElement e;
    e.add(s, c);
    return e;
}

void ExteriorElement::add(Subset s, const mpz_class& c)
{
    if (c == 0)
        return;
    auto& slot = terms_[s];
    slot += c;
    if (slot == 0)
        terms_.erase(s);
}

ExteriorElement ExteriorElement::operator+(const ExteriorElement& o) const
{
    ExteriorElement e = *this;
    for (const auto& [s, c] : o.terms_)
        e.add(s, c);
    return e;
}

ExteriorElement ExteriorElement::operator-(const ExteriorElement& o) const
{
    return *this + o * -1;
}

ExteriorElement ExteriorElement::operator*(const mpz_class& k) const
{
    ExteriorElement e;
    for (const auto& [s, c] : terms_)
        e.add(s, c * k);
    return e;
}

ExteriorElement ExteriorElement::wedge(const ExteriorElement& o) const
{
    ExteriorElement e;
    for (const auto& [a, x] : terms_) {
        for (const auto& [b, y] : o.terms_) {
            int sign = wedge_sign(a, b);
            if (sign)
                e.add(a | b, sign * x * y);
        }
    }
    return e;
}

std::string ExteriorElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [s, c] : terms_) {
        mpz_class mag = abs(c);
        out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        if (mag != 1)
            out << mag.get_str() << '*';
        out << 'e' << subset_string(s);
    }
    return out.str();
}

}  // namespace motarr
