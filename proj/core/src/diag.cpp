#include "grouptrace/diag.hpp"

#include <algorithm>
#include <numeric>

namespace grouptrace {

namespace {

// invariant-factor normal form of a torsion list: collect prime powers,
// align the largest exponents together, recombine into a divisibility chain
std::vector<std::uint64_t> normalize_torsion(std::vector<std::uint64_t> torsion) {
    std::map<std::uint64_t, std::vector<std::uint64_t>> exponents; // prime -> exps
    for (std::uint64_t d : torsion) {
        if (d < 2)
            throw Error("torsion factors must be >= 2");
        for (std::uint64_t p = 2; p * p <= d; ++p) {
            if (d % p != 0)
                continue;
            std::uint64_t e = 0;
            while (d % p == 0) {
                d /= p;
                ++e;
            }
            exponents[p].push_back(e);
        }
        if (d > 1)
            exponents[d].push_back(1);
    }

    std::size_t count = 0;
    for (auto& [p, exps] : exponents) {
        std::sort(exps.begin(), exps.end(), std::greater<>());
        count = std::max(count, exps.size());
    }

    // factor k (from the largest) collects the k-th largest exponent of each prime
    std::vector<std::uint64_t> factors(count, 1);
    for (auto& [p, exps] : exponents)
        for (std::size_t k = 0; k < exps.size(); ++k) {
            std::uint64_t pe = 1;
            for (std::uint64_t e = 0; e < exps[k]; ++e)
                pe *= p;
            factors[k] *= pe;
        }
    std::reverse(factors.begin(), factors.end()); // ascending: d_1 | d_2 | ...
    return factors;
}

} // namespace

FinGenAbelianGroup::FinGenAbelianGroup(std::size_t free_rank,
                                       std::vector<std::uint64_t> torsion)
    : free_rank_(free_rank), torsion_(normalize_torsion(std::move(torsion))) {}

FinGenAbelianGroup::Element FinGenAbelianGroup::zero() const {
    return Element(tuple_length(), 0);
}

FinGenAbelianGroup::Element FinGenAbelianGroup::reduce(Element e) const {
    if (e.size() != tuple_length())
        throw DimensionError("element tuple length does not match the group");
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        auto d = static_cast<std::int64_t>(torsion_[i]);
        std::int64_t& c = e[free_rank_ + i];
        c %= d;
        if (c < 0)
            c += d;
    }
    return e;
}

FinGenAbelianGroup::Element FinGenAbelianGroup::add(const Element& a,
                                                    const Element& b) const {
    if (a.size() != tuple_length() || b.size() != tuple_length())
        throw DimensionError("element tuple length does not match the group");
    Element r(tuple_length());
    for (std::size_t i = 0; i < tuple_length(); ++i)
        r[i] = a[i] + b[i];
    return reduce(std::move(r));
}

FinGenAbelianGroup::Element FinGenAbelianGroup::negate(const Element& a) const {
    Element r(a);
    for (auto& c : r)
        c = -c;
    return reduce(std::move(r));
}

std::uint64_t FinGenAbelianGroup::torsion_order() const {
    return std::accumulate(torsion_.begin(), torsion_.end(), std::uint64_t(1),
                           std::multiplies<>());
}

std::vector<FinGenAbelianGroup::Element> FinGenAbelianGroup::elements() const {
    if (!is_finite())
        throw UnsupportedError("cannot enumerate an infinite character group");
    std::vector<Element> out = {zero()};
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        std::vector<Element> next;
        for (const Element& e : out)
            for (std::uint64_t c = 0; c < torsion_[i]; ++c) {
                Element e2 = e;
                e2[free_rank_ + i] = static_cast<std::int64_t>(c);
                next.push_back(std::move(e2));
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Scalar FinSupportFunctional::value_at(const FinGenAbelianGroup::Element& m) const {
    const auto it = support.find(group.reduce(m));
    return it == support.end() ? Scalar::zero(field) : it->second;
}

void FinSupportFunctional::set(const FinGenAbelianGroup::Element& m, const Scalar& v) {
    const auto key = group.reduce(m);
    if (v.is_zero())
        support.erase(key);
    else
        support[key] = v;
}

FinSupportFunctional zero_functional(const FinGenAbelianGroup& g, const Field& f) {
    return {g, f, {}};
}

FinSupportFunctional indicator(const FinGenAbelianGroup& g,
                               const FinGenAbelianGroup::Element& m, const Scalar& v) {
    FinSupportFunctional w = zero_functional(g, v.field());
    w.set(m, v);
    return w;
}

FinSupportFunctional add(const FinSupportFunctional& a, const FinSupportFunctional& b) {
    if (!(a.group == b.group) || a.field != b.field)
        throw FieldMismatchError("functionals over different groups or fields");
    FinSupportFunctional r = a;
    for (const auto& [m, v] : b.support)
        r.set(m, r.value_at(m) + v);
    return r;
}

Scalar DiagDualVector::value_at(const FinGenAbelianGroup::Element& m) const {
    const auto it = overrides.find(group.reduce(m));
    return it == overrides.end() ? base : it->second;
}

DiagDualVector DiagDualVector::constant_one(const FinGenAbelianGroup& g, const Field& f) {
    return {g, f, Scalar::one(f), {}};
}

DiagDualVector DiagDualVector::of(const FinSupportFunctional& w) {
    return {w.group, w.field, Scalar::zero(w.field), w.support};
}

Scalar LaurentElement::coeff_at(const FinGenAbelianGroup::Element& m) const {
    const auto it = coeffs.find(group.reduce(m));
    return it == coeffs.end() ? Scalar::zero(field) : it->second;
}

void LaurentElement::set(const FinGenAbelianGroup::Element& m, const Scalar& v) {
    const auto key = group.reduce(m);
    if (v.is_zero())
        coeffs.erase(key);
    else
        coeffs[key] = v;
}

LaurentElement monomial(const FinGenAbelianGroup& g, const FinGenAbelianGroup::Element& m,
                        const Scalar& coeff) {
    LaurentElement a{g, coeff.field(), {}};
    a.set(m, coeff);
    return a;
}

FinSupportFunctional diag_convolve(const FinSupportFunctional& u,
                                   const FinSupportFunctional& v) {
    if (!(u.group == v.group) || u.field != v.field)
        throw FieldMismatchError("functionals over different groups or fields");
    FinSupportFunctional r = zero_functional(u.group, u.field);
    for (const auto& [m, a] : u.support) {
        const Scalar b = v.value_at(m);
        if (!b.is_zero())
            r.set(m, a * b);
    }
    return r;
}

Scalar diag_trace_pair(const DiagDualVector& w, const FinSupportFunctional& wt) {
    if (!(w.group == wt.group) || w.field != wt.field)
        throw FieldMismatchError("pairing over different groups or fields");
    Scalar s = Scalar::zero(w.field);
    for (const auto& [m, v] : wt.support)
        s += w.value_at(m) * v;
    return s;
}

Scalar diag_trace_pair(const FinSupportFunctional& w, const FinSupportFunctional& wt) {
    return diag_trace_pair(DiagDualVector::of(w), wt);
}

LaurentElement diag_phi(const FinSupportFunctional& wt) {
    return {wt.group, wt.field, wt.support};
}

FinSupportFunctional diag_integral(const FinGenAbelianGroup& g, const Field& f) {
    return indicator(g, g.zero(), Scalar::one(f));
}

FinSupportFunctional diag_fourier(const LaurentElement& a) {
    // w_G(x^{-m} x^k) picks out the coefficient at k = m
    return {a.group, a.field, a.coeffs};
}

std::vector<FinSupportFunctional>
density_witness(const FinGenAbelianGroup& g, const Field& f,
                const std::vector<FinGenAbelianGroup::Element>& coords) {
    std::vector<FinSupportFunctional> out;
    out.reserve(coords.size());
    for (const auto& m : coords)
        out.push_back(indicator(g, m, Scalar::one(f)));
    return out;
}

} // namespace grouptrace
