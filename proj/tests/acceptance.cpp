// One line per acceptance criterion; exit status is the number of failures.
#include "hds/json_io.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace hds;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream note;
    void require(bool ok, const std::string& what) {
        if (!ok && pass) note << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

std::string label(int g, int b) { return "(" + std::to_string(g) + "," + std::to_string(b) + ")"; }

const std::vector<std::pair<int, int>> kSmall{{1, 1}, {2, 0}, {0, 3}};

// Twist generators: the decomposition curves plus the named curves of the model (a decomposition
// alone is preserved by its own twists, so it cannot produce crossing pairs).
std::vector<MultiCurve> twist_pool(const Surface& S, const PantsDecomposition& P) {
    std::vector<MultiCurve> pool = P.curves;
    for (const auto& [name, c] : S.named)
        if (curve_components(c).size() == 1 && count_components(S, c) == 1) pool.push_back(c);
    return pool;
}

// Random mapping class applied to a pool curve: half twists about path arcs and twists about pool curves.
MultiCurve random_curve(const Surface& S, const std::vector<MultiCurve>& pool, std::mt19937& rng, int length) {
    MultiCurve c = pool[rng() % pool.size()];
    for (int j = 0; j < length; ++j) {
        long power = rng() % 2 ? 1 : -1;
        if (rng() % 2 && S.points >= 2) {
            int k = 1 + (int)(rng() % (S.points - 1));
            c = encode_halftwist(S.path[k], power)(c);
        } else {
            c = twist_encoding(S, pool[rng() % pool.size()], power)(c);
        }
        c = normalize(S, c.w).curve;
    }
    return c;
}

void check_census(Outcome& o) {
    int cases = 0;
    for (int g = 0; g <= 3; ++g)
        for (int b = 0; b <= 4; ++b) {
            Surface S = build_surface(g, 2 * b);
            try {
                check_surface_hypotheses(S);
            } catch (const std::invalid_argument&) {
                continue;
            }
            PantsDecomposition P = induced_decomposition(S, Flavor::Standard);
            Census c = piece_census(S, P.curves);
            o.require((int)P.size() == 3 * g - 3 + 2 * b, "curve count at " + label(g, b));
            o.require(c.valid, "census at " + label(g, b) + ": " + c.problem);
            ++cases;
        }
    o.note << cases << " surfaces";
}

void check_twist_law(Outcome& o) {
    std::mt19937 rng(20240601);
    int total = 0;
    for (auto [g, b] : kSmall) {
        Surface S = build_surface(g, 2 * b);
        PantsDecomposition P = induced_decomposition(S, Flavor::Standard);
        auto pool = twist_pool(S, P);
        int pairs = 0, tries = 0;
        while (pairs < 100) {
            if (++tries > 20000) {
                o.require(false, "too few crossing pairs on " + label(g, b));
                break;
            }
            MultiCurve x = random_curve(S, pool, rng, 1 + rng() % 3);
            MultiCurve y = random_curve(S, pool, rng, 1 + rng() % 3);
            Int i = geometric_intersection(S, x, y);
            if (i == 0) continue;
            long n = 1 + pairs % 3;
            Int lhs = geometric_intersection(S, twist_encoding(S, y, n)(x), x);
            o.require(lhs == n * i * i, "pair " + std::to_string(pairs) + " on " + label(g, b));
            ++pairs;
        }
        total += pairs;
    }
    o.note << total << " pairs";
}

void check_growth(Outcome& o) {
    for (auto [g, b] : kSmall) {
        Surface S = build_surface(g, 2 * b);
        PantsDecomposition P = induced_decomposition(S, Flavor::Standard);
        MultiCurve seed = seed_curve(S);
        SeamednessReport r1 = seamedness_growth_report(S, P, seed, 1);
        o.require(r1.ok() && r1.image_vs_P >= 4 && r1.P_vs_image >= 4, "k=1 on " + label(g, b));
        auto Y = iterate_tower(S, P, seed, 0);
        for (const auto& y : Y[0].curves) {
            SeamednessReport r2 = seamedness_growth_report(S, P, y, 2);
            o.require(r2.ok() && r2.image_vs_P >= 16 && r2.P_vs_image >= 16, "k=2 on " + label(g, b));
        }
    }
    o.note << "k in {1,2} on 3 surfaces";
}

void check_two_k_law(Outcome& o) {
    int curves = 0;
    for (auto [g, b] : kSmall) {
        Surface S = build_surface(g, 2 * b);
        PantsDecomposition P = induced_decomposition(S, Flavor::Standard);
        std::vector<MultiCurve> corpus{seed_curve(S)};
        for (const auto& Y : iterate_tower(S, P, corpus[0], 1)) corpus.insert(corpus.end(), Y.curves.begin(), Y.curves.end());
        for (const auto& c : corpus) {
            Int k = min_seam(classify_arcs(S, P, c));
            if (k < 1) continue;
            for (const auto& p : P.curves) o.require(geometric_intersection(S, c, p) >= 2 * k, "curve on " + label(g, b));
            ++curves;
        }
    }
    o.note << curves << " seamed curves";
}

void check_claim_conditions(Outcome& o) {
    int checks = 0;
    for (auto [g, b] : std::vector<std::pair<int, int>>{{0, 3}, {1, 1}, {2, 1}}) {
        Surface S = build_surface(g, 2 * b);
        PantsDecomposition P = induced_decomposition(S, Flavor::Standard);
        auto tower = iterate_tower(S, P, seed_curve(S), 2);
        for (std::size_t n = 0; n < tower.size(); ++n) {
            const auto& Y = tower[n];
            std::string where = label(g, b) + " level " + std::to_string(n);
            if (S.disk_boundary)
                for (const auto& y : Y.curves) o.require(disk_arc_count(S, y) >= 2, "disk arcs at " + where);
            for (int c = 1; c <= b; ++c) {
                PantsDecomposition W = induced_decomposition(S, Flavor::Warped, default_blocks(b, c));
                o.require(is_k_seamed(S, W, Y.curves, 2), "2-seamed w.r.t. P' (c=" + std::to_string(c) + ") at " + where);
                ++checks;
            }
        }
    }
    o.note << checks << " level/block checks";
}

void check_components(Outcome& o) {
    int cases = 0;
    for (int g = 0; g <= 2; ++g)
        for (int b = 1; b <= 4; ++b) {
            if (g == 0 && b < 3) continue;
            Surface S = build_surface(g, 2 * b);
            PantsDecomposition P = induced_decomposition(S, Flavor::Standard);
            o.require(link_component_count(marked_point_pairing(P), marked_point_pairing(S, P.curves)) == b,
                      "standard control at " + label(g, b));
            for (int c = 1; c <= b; ++c) {
                SplittingDescriptor sd = construct_high_distance_splitting(g, b, c, 1, false);
                o.require(sd.components == c, "c=" + std::to_string(c) + " at " + label(g, b));
                ++cases;
            }
        }
    o.note << cases << " splittings";
}

void check_certificates(Outcome& o) {
    int built = 0, corruptions = 0;
    for (auto [g, b] : std::vector<std::pair<int, int>>{{0, 3}, {2, 0}}) {
        std::vector<int> blocks = b ? default_blocks(b, 1) : std::vector<int>{};
        for (int n = 0; n <= 3; ++n) {
            DistanceCertificate c = build_certificate(g, b, blocks, n);
            CheckReport r = check_certificate(c);
            o.require(r.pass, "n=" + std::to_string(n) + " at " + label(g, b));
            ++built;
        }
        const DistanceCertificate base = build_certificate(g, b, blocks, 2);
        using Edit = std::function<void(DistanceCertificate&)>;
        std::vector<std::tuple<std::string, Edit, std::vector<std::string>>> cases = {
            {"Y1 curve replaced by a P curve", [](auto& c) { c.tower[1][0] = c.P[0]; }, {"O2", "O3", "O4", "O6"}},
            {"claimed bound raised", [](auto& c) { c.n += 1; }, {"S"}},
            {"top level dropped", [](auto& c) { c.tower.pop_back(); }, {"O5", "S"}},
            {"seed replaced by a P curve", [](auto& c) { c.seed = c.P[1]; }, {"O1", "O4"}},
            {"O3 count edited",
             [](auto& c) {
                 for (auto& ob : c.obligations)
                     if (ob.name == "O3") ob.counts[0].second += 1;
             },
             {"O3"}},
            {"O4 verdict flipped",
             [](auto& c) {
                 for (auto& ob : c.obligations)
                     if (ob.name == "O4") ob.pass = false;
             },
             {"O4"}},
            {"levels 1 and 2 swapped", [](auto& c) { std::swap(c.tower[1], c.tower[2]); }, {"O2", "O4", "O5"}},
            {"level 0 replaced by P", [](auto& c) { c.tower[0] = c.P; }, {"O2", "O3", "O4", "O6"}},
            {"level 2 replaced by level 0", [](auto& c) { c.tower[2] = c.tower[0]; }, {"O4", "O5"}},
            {"P' curve replaced", [](auto& c) { c.Pprime[0] = c.tower[0][0]; }, {"O5", "S"}},
            {"level 2 curve doubled",
             [](auto& c) {
                 for (auto& x : c.tower[2][0].w) x *= 2;
             },
             {"O2", "O6", "S"}},
            {"genus changed", [](auto& c) { c.ms.genus += 1; }, {"S"}},
            {"O6 record removed", [](auto& c) { c.obligations.pop_back(); }, {"O6"}},
            {"level repeated", [](auto& c) { c.tower[1] = c.tower[0]; }, {"O2", "O4"}},
            {"seed replaced by a level 0 curve", [](auto& c) { c.seed = c.tower[0][0]; }, {"O1", "O4"}},
        };
        for (auto& [name, edit, expected] : cases) {
            DistanceCertificate c = base;
            edit(c);
            CheckReport r = check_certificate(c);
            std::string got;
            for (const auto& f : r.failed) got += f + " ";
            o.require(!r.pass && r.failed == expected, name + " at " + label(g, b) + " (failed: " + got + ")");
            ++corruptions;
        }
    }
    o.note << built << " certificates, " << corruptions << " corruptions";
}

void check_disk_oracle(Outcome& o) {
    std::mt19937 rng(7);
    int yes = 0, no = 0;
    auto expect_yes = [&](const Surface& S, const PantsDecomposition& P, const MultiCurve& c, const std::string& what) {
        DiskVerdict v = bounds_disk(S, P, c);
        o.require(v.answer == DiskAnswer::Yes, what + ": " + disk_answer_name(v.answer) + " (" + v.reason + ")");
        if (v.answer == DiskAnswer::Yes) {
            o.require(v.witness.has_value() && replay_witness(S, P, c, *v.witness), what + ": witness");
            ++yes;
        }
    };
    for (auto [g, b] : std::vector<std::pair<int, int>>{{0, 3}, {1, 1}, {2, 0}, {1, 2}, {1, 3}}) {
        Surface S = build_surface(g, 2 * b);
        PantsDecomposition P = induced_decomposition(S, Flavor::Standard);
        std::string at = label(g, b);
        for (const auto& p : P.curves) expect_yes(S, P, p, "P curve at " + at);
        if (b >= 3) expect_yes(S, P, path_boundary(S, 3, 5), "band sum at " + at);
        auto moves = disk_moves(S, P);
        for (int t = 0; t < 10; ++t) {
            MultiCurve c = P.curves[rng() % P.size()];
            int len = 1 + rng() % 3;
            for (int j = 0; j < len; ++j) c = apply_move(S, P, moves[rng() % moves.size()], c);
            expect_yes(S, P, c, "moved curve at " + at);
        }
        MultiCurve seed = seed_curve(S);
        std::vector<MultiCurve> seamed{seed};
        for (const auto& Y : iterate_tower(S, P, seed, 1)) seamed.insert(seamed.end(), Y.curves.begin(), Y.curves.end());
        for (const auto& c : seamed) {
            DiskVerdict v = bounds_disk(S, P, c);
            o.require(v.answer == DiskAnswer::No && !v.witness, "seamed curve at " + at + ": " + disk_answer_name(v.answer));
            ++no;
        }
    }
    o.note << yes << " yes with replayed witnesses, " << no << " no";
}

void check_consistency(Outcome& o) {
    Surface S = build_surface(0, 6);
    PantsDecomposition P = induced_decomposition(S, Flavor::Standard);
    auto tower = iterate_tower(S, P, seed_curve(S), 1);
    DistanceCertificate cert = build_certificate(0, 3, {6}, 1);
    bool certified = check_certificate(cert).pass;
    DistanceBound d = distance_upper_bound(S, P.curves, tower[1].curves, Int(kDefaultDistanceCap));
    o.require(d.bound.has_value(), "no path found within the cap");
    if (d.bound) {
        o.require(*d.bound >= 1, "bound below 1");
        o.require(!certified || *d.bound >= cert.n, "bound contradicts the certificate");
        o.note << "bound " << *d.bound << " (certified " << cert.n << "), " << d.visited << " visited";
    }
}

void check_determinism(Outcome& o) {
    auto pipeline = [] {
        clear_shorten_cache();
        SplittingDescriptor sd = construct_high_distance_splitting(0, 3, 1, 2);
        Surface S = build_surface(0, 6);
        return io::dump(io::splitting_json(S, sd)) + io::dump(io::certificate_json(*sd.certificate));
    };
    std::string a = pipeline(), b = pipeline();
    o.require(a == b, "artifacts differ");
    o.note << a.size() << " bytes identical";
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
        {"pants census", check_census},
        {"twist law", check_twist_law},
        {"seamedness growth", check_growth},
        {"2k intersection law", check_two_k_law},
        {"tower level conditions", check_claim_conditions},
        {"component counts", check_components},
        {"certificates", check_certificates},
        {"disk oracle", check_disk_oracle},
        {"distance consistency", check_consistency},
        {"determinism", check_determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failures += !o.pass;
        std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first << " -- "
                  << o.note.str() << " [" << std::fixed;
        std::cout.precision(1);
        std::cout << secs << "s]" << std::endl;
    }
    return failures;
}
