#include "hds/twist.hpp"

#include <stdexcept>

namespace hds {

std::size_t max_bits(const MultiCurve& c) {
    std::size_t m = 0;
    for (const auto& x : c.w) m = std::max(m, mpz_sizeinbase(x.get_mpz_t(), 2));
    return m;
}

void require_disjoint(const Surface& S, const std::vector<MultiCurve>& Y, const char* what) {
    for (std::size_t i = 0; i < Y.size(); ++i)
        for (std::size_t j = i + 1; j < Y.size(); ++j)
            if (sgn(geometric_intersection(S, Y[i], Y[j])) != 0)
                throw std::invalid_argument(std::string(what) + " components " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
}

std::vector<MultiCurve> dehn_twist(const Surface& S, const std::vector<MultiCurve>& X, const std::vector<MultiCurve>& Y, long exponent) {
    if (exponent == 0 || Y.empty()) return X;
    require_disjoint(S, Y, "twisting collection");
    require_disjoint(S, X, "twisted collection");
    Encoding h = twist_encoding(S, lam_sum(Y), exponent);
    std::vector<MultiCurve> out;
    out.reserve(X.size());
    for (const auto& x : X) out.push_back(h(x));
    return out;
}

std::vector<MultiCurve> apply_word(const Surface& S, const std::vector<MultiCurve>& X, const TwistWord& word) {
    std::vector<MultiCurve> cur = X;
    for (const auto& t : word) cur = dehn_twist(S, cur, t.curves, t.exponent);
    return cur;
}

namespace {

PantsDecomposition twisted(const Surface& S, const PantsDecomposition& P, const std::vector<MultiCurve>& Y, const TowerLimits& lim) {
    Encoding h = twist_encoding(S, lam_sum(Y), 2);
    std::vector<MultiCurve> images;
    for (const auto& p : P.curves) {
        images.push_back(h(p));
        if (max_bits(images.back()) > lim.max_bits) throw std::runtime_error("resource cap exceeded: coordinates above " + std::to_string(lim.max_bits) + " bits");
    }
    return transport(P, std::move(images));
}

} // namespace

std::vector<PantsDecomposition> iterate_tower(const Surface& S, const PantsDecomposition& P, const MultiCurve& seed, int n, const TowerLimits& lim) {
    if (n < 0) throw std::invalid_argument("tower height must be nonnegative");
    std::vector<PantsDecomposition> out;
    out.push_back(twisted(S, P, {seed}, lim));
    for (int i = 1; i <= n; ++i) out.push_back(twisted(S, P, out.back().curves, lim));
    return out;
}

SeamednessReport seamedness_growth_report(const Surface& S, const PantsDecomposition& P, const MultiCurve& gamma, const Int& k) {
    SeamednessReport r;
    r.k = k;
    r.precondition = is_k_seamed(classify_arcs(S, P, gamma), k);
    PantsDecomposition Q = twisted(S, P, {gamma}, {});
    const Int bound = 4 * k * k;
    r.gamma_vs_image = min_seam(classify_arcs(S, Q, gamma));
    bool first = true;
    for (const auto& q : Q.curves) {
        Int m = min_seam(classify_arcs(S, P, q));
        if (first || m < r.image_vs_P) r.image_vs_P = m;
        first = false;
    }
    first = true;
    for (const auto& p : P.curves) {
        Int m = min_seam(classify_arcs(S, Q, p));
        if (first || m < r.P_vs_image) r.P_vs_image = m;
        first = false;
    }
    r.bullet1 = r.gamma_vs_image >= k;
    r.bullet2 = r.image_vs_P >= bound;
    r.bullet3 = r.P_vs_image >= bound;
    return r;
}

} // namespace hds
