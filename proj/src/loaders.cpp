#include "hds/loaders.hpp"

#include <stdexcept>

namespace hds {

namespace {

using Tri = std::array<Label, 3>;
using Seq = std::vector<Label>;

struct Builder {
    StandardModel m;
    void tri(std::vector<Tri> ts) { m.T = std::make_shared<Triangulation>(std::move(ts)); }
    void cut(const std::string& name, const Seq& s) { m.curves.emplace(name, from_cut_sequence(m.T, s)); }
    void raw(const std::string& name, const std::vector<long>& w) {
        if ((int)w.size() != m.T->zeta()) throw std::logic_error("loader: weight vector length for " + name);
        Weights ww(w.begin(), w.end());
        m.curves.emplace(name, Lamination{m.T, ww});
    }
    void arc(int i, Label e) { m.arcs.emplace("s_" + std::to_string(i), edge_arc(m.T, e)); }
};

Seq operator+(Seq a, const Seq& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

Seq range_seq(int count, int start, int step) {
    Seq s;
    for (int j = 0; j < count; ++j) s.push_back(start + step * j);
    return s;
}

std::vector<long> rep(std::vector<long> v, int times) {
    std::vector<long> out;
    for (int i = 0; i < times; ++i) out.insert(out.end(), v.begin(), v.end());
    return out;
}

std::vector<long> operator+(std::vector<long> a, const std::vector<long>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

StandardModel S_0_n(int n) {
    Builder B;
    std::vector<Tri> ts;
    for (int i = 0; i < n - 3; ++i) ts.push_back({i, i + 2 * n - 4, ~(i + 1)});
    for (int i = n - 2; i < 2 * n - 5; ++i) ts.push_back({i, ~(i + 1), ~(i + n - 1)});
    ts.push_back({~0, ~(n - 2), ~(2 * n - 4)});
    ts.push_back({n - 3, 3 * n - 7, 2 * n - 5});
    B.tri(ts);
    for (int i = 0; i < n - 2; ++i) B.arc(i, 2 * n - 4 + i);
    B.arc(n - 2, 2 * n - 5);
    B.arc(n - 1, 0);
    return B.m;
}

StandardModel S_1_n(int n) {
    Builder B;
    if (n == 1) {
        B.tri({{0, 1, 2}, {~0, ~1, ~2}});
        B.cut("a_0", {0, 2});
        B.cut("b_0", {0, 1});
        return B.m;
    }
    std::vector<Tri> ts{{0, 1, 2}};
    for (int i = 0; i < n - 1; ++i) ts.push_back({~(1 + 2 * i), 1 + 2 * i + 2, 1 + 2 * i + 3});
    ts.push_back({2 * n + 1, ~(2 * n), ~(2 * n - 1)});
    for (int i = 1; i < n - 1; ++i) ts.push_back({2 * n + 1 + i, ~(2 * n - 2 * i), ~(2 * n + i)});
    ts.push_back({~0, ~(3 * n - 1), ~2});
    B.tri(ts);
    B.cut("a_0", Seq{0, 1} + range_seq(n - 1, 3, 2) + range_seq(n - 1, 2 * n + 1, 1));
    B.cut("b_0", {0, 2});
    for (int i = 1; i < n; ++i)
        B.cut("p_" + std::to_string(i), Seq{0, 1} + range_seq(n - 1 - i, 3, 2) + Seq{2 * n + 2 - 2 * i} + range_seq(n - i, 2 * n + i, 1));
    B.arc(0, 2 * n - 1);
    for (int i = 1; i < n; ++i) B.arc(i, 2 * n + 2 - 2 * i);
    return B.m;
}

StandardModel S_2_n(int n) {
    Builder B;
    if (n == 1) {
        B.tri({{0, 1, 2}, {~1, 3, 4}, {~2, ~3, ~4}, {~0, 5, 6}, {~5, 7, 8}, {~6, ~7, ~8}});
        B.cut("a_0", {1, 2, 3});
        B.cut("a_1", {5, 6, 7});
        B.cut("b_0", {1, 2, 4});
        B.cut("b_1", {5, 6, 8});
        B.cut("c_0", {0, 1, 2, 3, 0, 5, 6, 7});
        B.raw("d_1", {2, 2, 2, 2, 2, 1, 1, 1, 0});
        return B.m;
    }
    std::vector<Tri> ts{{0, 1, 2}, {~1, 3, 4}, {~2, ~3, ~4}, {~0, 5, 6}, {~6, ~(3 * n + 5), ~8}};
    for (int i = 0; i < n; ++i) ts.push_back({~(5 + 2 * i), 5 + 2 * i + 2, 5 + 2 * i + 3});
    ts.push_back({2 * n + 7, ~(2 * n + 6), ~(2 * n + 5)});
    for (int i = 1; i < n - 1; ++i) ts.push_back({2 * n + 7 + i, ~(2 * n + 6 - 2 * i), ~(2 * n + 6 + i)});
    B.tri(ts);
    Seq tail = range_seq(n, 7, 2) + range_seq(n - 1, 2 * n + 7, 1);
    B.cut("a_0", {1, 2, 3});
    B.cut("a_1", Seq{6, 5} + tail);
    B.cut("b_0", {1, 2, 4});
    B.cut("b_1", {5, 6, 8});
    B.cut("c_0", Seq{6, 0, 2, 4, 1, 2, 3, 4, 2, 0, 5} + tail);
    B.raw("d_1", std::vector<long>{2, 2, 2, 2, 2, 1, 1, 1, 0} + rep({1, 0}, n - 1) + rep({1}, n - 1));
    for (int i = 1; i < n; ++i)
        B.cut("p_" + std::to_string(i), Seq{6, 5} + range_seq(n - i, 7, 2) + Seq{2 * n + 8 - 2 * i} + range_seq(n - i, 2 * n + 6 + i, 1));
    B.arc(0, 2 * n + 5);
    for (int i = 1; i < n; ++i) B.arc(i, 2 * n + 8 - 2 * i);
    return B.m;
}

StandardModel S_3_n(int n) {
    Builder B;
    if (n == 1) {
        B.tri({{0, 1, 2}, {~1, 3, 4}, {~2, ~3, ~4}, {5, 6, 7}, {~6, 8, 9}, {~7, ~8, ~9}, {10, 11, 12}, {~11, 13, 14}, {~12, ~13, ~14}, {~0, ~5, ~10}});
        B.cut("a_0", {1, 2, 3});
        B.cut("a_1", {6, 7, 8});
        B.cut("a_2", {11, 12, 13});
        B.cut("b_0", {1, 2, 4});
        B.cut("b_1", {6, 7, 9});
        B.cut("b_2", {11, 12, 14});
        B.cut("c_0", {0, 2, 4, 1, 2, 3, 4, 2, 0, 5, 6, 8, 7, 5});
        B.cut("c_1", {5, 7, 9, 6, 7, 8, 9, 7, 5, 10, 11, 13, 12, 10});
        B.raw("d_1", {2, 2, 2, 2, 2, 2, 1, 1, 1, 0, 0, 0, 0, 0, 0});
        B.raw("d_2", {2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 0});
        return B.m;
    }
    std::vector<Tri> ts{{0, 1, 2}, {~1, 3, 4}, {~2, ~3, ~4}, {5, 6, 7}, {~6, 8, 9}, {~7, ~8, ~9}, {10, 11, 12}, {~11, 13, 14}, {~12, ~(3 * n + 11), ~14}};
    for (int i = 0; i < n - 1; ++i) ts.push_back({~(13 + 2 * i), 13 + 2 * i + 2, 13 + 2 * i + 3});
    ts.push_back({2 * n + 13, ~(2 * n + 12), ~(2 * n + 11)});
    for (int i = 1; i < n - 1; ++i) ts.push_back({2 * n + 13 + i, ~(2 * n + 12 - 2 * i), ~(2 * n + 12 + i)});
    ts.push_back({~0, ~5, ~10});
    B.tri(ts);
    Seq tail = range_seq(n, 13, 2) + range_seq(n - 1, 2 * n + 13, 1);
    B.cut("a_0", {1, 2, 3});
    B.cut("a_1", {6, 7, 8});
    B.cut("a_2", Seq{12, 11} + tail);
    B.cut("b_0", {1, 2, 4});
    B.cut("b_1", {6, 7, 9});
    B.cut("b_2", {11, 12, 14});
    B.cut("c_0", {0, 2, 4, 3, 2, 1, 4, 2, 0, 5, 7, 8, 6, 5});
    B.cut("c_1", Seq{12, 10, 5, 7, 9, 6, 7, 8, 9, 7, 5, 10, 11} + tail);
    B.raw("d_1", std::vector<long>{2, 2, 2, 2, 2, 2, 1, 1, 1} + rep({0}, 3 * n + 3));
    B.raw("d_2", std::vector<long>{2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 0} + rep({1, 0}, n - 1) + rep({1}, n - 1));
    for (int i = 1; i < n; ++i)
        B.cut("p_" + std::to_string(i), Seq{12, 11} + range_seq(n - i, 13, 2) + Seq{2 * n + 14 - 2 * i} + range_seq(n - i, 2 * n + 12 + i, 1));
    B.arc(0, 2 * n + 11);
    for (int i = 1; i < n; ++i) B.arc(i, 2 * n + 14 - 2 * i);
    return B.m;
}

StandardModel S_g_n(int g, int n) {
    Builder B;
    const Seq cpat{0, 2, 4, 3, 2, 1, 4, 2, 0, 5, 6, 8, 7, 5};
    auto shifted = [](const Seq& p, int off) {
        Seq s;
        for (Label x : p) s.push_back(x + off);
        return s;
    };
    std::vector<Tri> ts;
    for (int i = 0; i < g; ++i) ts.push_back({5 * i, 5 * i + 1, 5 * i + 2});
    for (int i = 0; i < g; ++i) ts.push_back({~(5 * i + 1), 5 * i + 3, 5 * i + 4});
    if (n == 1) {
        for (int i = 0; i < g; ++i) ts.push_back({~(5 * i + 2), ~(5 * i + 3), ~(5 * i + 4)});
        ts.push_back({~0, ~5, 5 * g});
        for (int i = 0; i < g - 4; ++i) ts.push_back({5 * g + 1 + i, ~(5 * g + i), ~(5 * i + 10)});
        ts.push_back({~(5 * g + g - 4), ~(5 * g - 10), ~(5 * g - 5)});
        B.tri(ts);
        for (int i = 0; i < g; ++i) {
            B.cut("a_" + std::to_string(i), {5 * i + 1, 5 * i + 2, 5 * i + 3});
            B.cut("b_" + std::to_string(i), {5 * i + 1, 5 * i + 2, 5 * i + 4});
        }
        B.cut("c_0", cpat);
        for (int i = 1; i < g - 2; ++i) B.cut("c_" + std::to_string(i), shifted(cpat, 5 * i) + Seq{5 * g + i - 1, 5 * g + i - 1});
        B.cut("c_" + std::to_string(g - 2), shifted(cpat, 5 * (g - 2)));
        for (int i = 1; i < g - 1; ++i)
            B.raw("d_" + std::to_string(i), std::vector<long>{2} + rep({2}, 5 * i) + std::vector<long>{1, 1, 1} + rep({0}, 5 * g + 3 * n - 7 - 5 * i) + rep({2}, i - 1) + rep({0}, 1 + g - 3 - i));
        B.raw("d_" + std::to_string(g - 1), rep({2}, 5 * g - 4) + std::vector<long>{1, 1, 1, 0} + rep({2}, g - 3));
        return B.m;
    }
    for (int i = 0; i < g - 1; ++i) ts.push_back({~(5 * i + 2), ~(5 * i + 3), ~(5 * i + 4)});
    ts.push_back({~(5 * (g - 1) + 2), ~(5 * (g - 1) + 4 + (3 * n - 3)), ~(5 * (g - 1) + 4)});
    const int o = 5 * g - 2;
    for (int i = 0; i < n - 1; ++i) ts.push_back({~(o + 2 * i), o + 2 * i + 2, o + 2 * i + 3});
    ts.push_back({o + 2 * (n - 1) + 2, ~(o + 2 * (n - 1) + 1), ~(o + 2 * (n - 1))});
    for (int i = 1; i < n - 1; ++i) ts.push_back({o + 2 * (n - 1) + 2 + i, ~(o + 2 * (n - 1) + 1 - 2 * i), ~(o + 2 * (n - 1) + 2 + i - 1)});
    const int c = 5 * g + 3 * n - 3;
    ts.push_back({~0, ~5, c});
    for (int i = 0; i < g - 4; ++i) ts.push_back({c + 1 + i, ~(c + i), ~(5 * i + 10)});
    ts.push_back({~(c + g - 4), ~(5 * g - 10), ~(5 * g - 5)});
    B.tri(ts);
    Seq tail = range_seq(n, 5 * (g - 1) + 3, 2) + range_seq(n - 1, 5 * g + 2 * n - 2, 1);
    for (int i = 0; i < g - 1; ++i) B.cut("a_" + std::to_string(i), {5 * i + 1, 5 * i + 2, 5 * i + 3});
    B.cut("a_" + std::to_string(g - 1), Seq{5 * (g - 1) + 1, 5 * (g - 1) + 2} + tail);
    for (int i = 0; i < g; ++i) B.cut("b_" + std::to_string(i), {5 * i + 1, 5 * i + 2, 5 * i + 4});
    B.cut("c_0", cpat);
    for (int i = 1; i < g - 2; ++i) B.cut("c_" + std::to_string(i), shifted(cpat, 5 * i) + Seq{c + i - 1, c + i - 1});
    B.cut("c_" + std::to_string(g - 2), shifted(Seq{7, 5, 0, 2, 4, 1, 2, 3, 4, 2, 0, 5, 6}, 5 * (g - 2)) + tail);
    for (int i = 1; i < g - 1; ++i)
        B.raw("d_" + std::to_string(i), std::vector<long>{2} + rep({2}, 5 * i) + std::vector<long>{1, 1, 1} + rep({0}, 5 * g + 3 * n - 7 - 5 * i) + rep({2}, i - 1) + rep({0}, 1 + g - 3 - i));
    B.raw("d_" + std::to_string(g - 1), rep({2}, 5 * g - 4) + std::vector<long>{1, 1, 1, 0} + rep({1, 0}, n - 1) + rep({1}, n - 1) + rep({2}, g - 3));
    for (int i = 1; i < n; ++i)
        B.cut("p_" + std::to_string(i), Seq{5 * (g - 1) + 1, 5 * (g - 1) + 2} + range_seq(n - i, 5 * (g - 1) + 3, 2) + Seq{5 * g + 2 * n - 1 - 2 * i} + range_seq(n - i, 5 * g + 2 * n - 3 + i, 1));
    B.arc(0, 5 * g + 2 * n - 4);
    for (int i = 1; i < n; ++i) B.arc(i, 5 * g + 2 * n - 1 - 2 * i);
    return B.m;
}

} // namespace

StandardModel load_standard(int genus, int punctures) {
    if (genus < 0) throw std::invalid_argument("negative genus");
    if (genus == 0) {
        if (punctures < 3) throw std::invalid_argument("sphere needs at least 3 punctures");
        return S_0_n(punctures);
    }
    if (punctures < 1) throw std::invalid_argument("positive genus needs at least 1 puncture");
    if (genus == 1) return S_1_n(punctures);
    if (genus == 2) return S_2_n(punctures);
    if (genus == 3) return S_3_n(punctures);
    return S_g_n(genus, punctures);
}

} // namespace hds
