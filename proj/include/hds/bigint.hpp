#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hds {

using Int = mpz_class;
using Weights = std::vector<Int>;

inline std::string dec(const Int& x) { return x.get_str(10); }

inline Int parse_int(const std::string& s) {
    Int x;
    if (s.empty() || x.set_str(s, 10) != 0) throw std::invalid_argument("not a decimal integer: '" + s + "'");
    return x;
}

inline Int max0(const Int& x) { return sgn(x) > 0 ? x : Int(0); }

struct WeightsHash {
    std::size_t operator()(const Weights& w) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (const auto& x : w) {
            const mpz_srcptr p = x.get_mpz_t();
            std::size_t n = mpz_size(p);
            h = (h ^ (std::size_t)mpz_sgn(p)) * 1099511628211ull;
            for (std::size_t i = 0; i < n; ++i) h = (h ^ (std::size_t)mpz_getlimbn(p, i)) * 1099511628211ull;
            h = (h ^ 0x9e37) * 1099511628211ull;
        }
        return h;
    }
};

} // namespace hds
