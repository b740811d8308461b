#include "factoromata/oracle.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace factoromata {

namespace {

int gamma_parity(std::uint64_t n) {
    return static_cast<int>((n - std::popcount(n)) & 1);
}

// 3^{alpha_3} * (-1)^{alpha_5} mod 8; each generator squares to 1 mod 8,
// so only the parities matter: (0,0)->1, (1,0)->3, (0,1)->7, (1,1)->5.
int window_residue(std::uint64_t n) {
    ThetaTriple t = theta_direct(n);
    static const int table[2][2] = {{1, 7}, {3, 5}};
    return table[t.t2][t.t3];
}

}  // namespace

std::uint64_t QuadrantSpec::lo() const {
    std::uint64_t quarter = std::uint64_t(1) << (s - 2);
    return quarter * static_cast<std::uint64_t>(j - 1);
}

std::uint64_t QuadrantSpec::hi() const {
    std::uint64_t quarter = std::uint64_t(1) << (s - 2);
    return quarter * static_cast<std::uint64_t>(j);
}

ThetaTriple theta_direct(std::uint64_t n) {
    int a3 = 0, a5 = 0;
    for (std::uint64_t w = n; w != 0; w >>= 1) {
        unsigned win = static_cast<unsigned>(w & 7);
        a3 ^= (win == 3 || win == 4) ? 1 : 0;
        a5 ^= (win == 5 || win == 6) ? 1 : 0;
    }
    return {gamma_parity(n), a3, a5};
}

FactorialResidue factorial_residue(std::uint64_t n) {
    FactorialResidue r;
    for (std::uint64_t i = 1; i <= n; ++i) {
        std::uint64_t v = i;
        while ((v & 1) == 0) {
            v >>= 1;
            ++r.nu2;
        }
        r.odd_mod8 = static_cast<int>((r.odd_mod8 * (v & 7)) & 7);
    }
    return r;
}

BigInt factorial_exact(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

bool three_square_test(const BigInt& m) {
    if (m < 0) throw std::invalid_argument("three_square_test: negative");
    BigInt v = m;
    while (v != 0 && (v & 3) == 0) v >>= 2;
    return (v & 7) != 7;
}

bool ScanResult::is_member(std::uint64_t n) const {
    return (bits[n / 64] >> (n % 64)) & 1;
}

std::uint64_t ScanResult::count(std::uint64_t n) const {
    if (n > limit) throw std::out_of_range("ScanResult::count: beyond limit");
    std::uint64_t w = n / 64;
    std::uint64_t mask = (n % 64 == 63) ? ~std::uint64_t(0)
                                        : ((std::uint64_t(1) << (n % 64 + 1)) - 1);
    return word_rank[w] + std::popcount(bits[w] & mask);
}

ScanResult scan_members(std::uint64_t limit, std::uint64_t max_limit) {
    if (limit > max_limit)
        throw std::invalid_argument("scan_members: limit above configured maximum");
    ScanResult r;
    r.limit = limit;
    std::size_t words = static_cast<std::size_t>(limit / 64 + 1);
    r.bits.assign(words, 0);
    static const ThetaTriple target{0, 0, 1};
    for (std::uint64_t n = 1; n <= limit; ++n)
        if (theta_direct(n) == target) r.bits[n / 64] |= std::uint64_t(1) << (n % 64);
    r.word_rank.assign(words, 0);
    std::uint32_t running = 0;
    for (std::size_t w = 0; w < words; ++w) {
        r.word_rank[w] = running;
        running += static_cast<std::uint32_t>(std::popcount(r.bits[w]));
    }
    return r;
}

namespace {

void scan_one_set(SetId id, std::uint64_t limit, const ScanResult& sc,
                  bool invert, GapScan& out) {
    auto& first_occ = id == SetId::S ? out.first_occ_s : out.first_occ_sbar;
    auto& lengths = id == SetId::S ? out.lengths_s : out.lengths_sbar;
    bool have_prev = false;
    std::uint64_t prev = 0;
    for (std::uint64_t n = 0; n <= limit; ++n) {
        bool member = sc.is_member(n) != invert;
        if (!member) continue;
        if (have_prev) {
            std::uint64_t g = n - prev;
            out.records.push_back({id, prev, g});
            lengths.insert(g);
            first_occ.emplace(g, prev);
        }
        prev = n;
        have_prev = true;
    }
}

}  // namespace

GapScan scan_gaps(std::uint64_t limit) {
    ScanResult sc = scan_members(limit);
    GapScan out;
    scan_one_set(SetId::S, limit, sc, true, out);
    scan_one_set(SetId::Sbar, limit, sc, false, out);
    return out;
}

DensityProfile density_profile(std::uint64_t limit, std::uint64_t floor_n) {
    if (floor_n < (std::uint64_t(1) << 10))
        throw std::invalid_argument("density_profile: floor below 2^10");
    if (limit < floor_n)
        throw std::invalid_argument("density_profile: limit below floor");
    ScanResult sc = scan_members(limit);
    DensityProfile p;
    std::uint64_t running = sc.count(floor_n - 1);
    unsigned __int128 best_sq = 0;  // (8*Sbar - n)^2 at argmax
    for (std::uint64_t n = floor_n; n <= limit; ++n) {
        running += sc.is_member(n) ? 1 : 0;
        long long dev8 = static_cast<long long>(8 * running) -
                         static_cast<long long>(n);
        if (dev8 > 0) ++p.pos_count;
        if (dev8 < 0) ++p.neg_count;
        unsigned __int128 a = dev8 < 0 ? -dev8 : dev8;
        unsigned __int128 sq = a * a;
        // dev(n)^2/n > dev(m)^2/m  <=>  dev(n)^2 * m > dev(m)^2 * n
        if (p.argmax == 0 || sq * p.argmax > best_sq * n) {
            p.argmax = n;
            p.sbar_at_argmax = running;
            p.dev8_at_argmax = dev8;
            best_sq = sq;
        }
        if ((n & (n - 1)) == 0) p.table.push_back({n, running, dev8});
    }
    p.d_value = std::abs(static_cast<double>(p.dev8_at_argmax)) /
                (8.0 * std::sqrt(static_cast<double>(p.argmax)));
    return p;
}

PropertyReport check_gamma_additivity(int k_max, std::uint64_t t_max) {
    PropertyReport rep;
    for (int k = 1; k <= k_max; ++k)
        for (std::uint64_t t = 1; t <= t_max; ++t) {
            std::uint64_t base = t << k;
            for (std::uint64_t i = 0; i < (std::uint64_t(1) << k); ++i) {
                ++rep.cases;
                if (gamma_parity(base + i) !=
                    (gamma_parity(i) ^ gamma_parity(base)))
                    rep.violations.push_back(
                        "gamma additivity fails at k=" + std::to_string(k) +
                        " t=" + std::to_string(t) + " i=" + std::to_string(i));
            }
        }
    return rep;
}

PropertyReport check_quadrant_constants(int s, std::uint64_t t_max) {
    if (s < 2) throw std::invalid_argument("check_quadrant_constants: s < 2");
    PropertyReport rep;
    for (std::uint64_t t = 1; t <= t_max; t += 2) {
        std::uint64_t base = t << s;
        for (int j = 1; j <= 4; ++j) {
            QuadrantSpec q{s, j};
            int constant = -1;
            for (std::uint64_t i = q.lo(); i < q.hi(); ++i) {
                ++rep.cases;
                // Residues mod 8 are self-inverse, so the ratio is a product.
                int r = (window_residue(base + i) * window_residue(i)) & 7;
                if (constant < 0) constant = r;
                if (r != constant || r % 2 == 0)
                    rep.violations.push_back(
                        "quadrant constant fails at t=" + std::to_string(t) +
                        " s=" + std::to_string(s) + " j=" + std::to_string(j) +
                        " i=" + std::to_string(i));
            }
        }
    }
    return rep;
}

WindowCountReport check_window_count(std::uint64_t t, int s, int r) {
    if (r < 0 || r >= s || t % 2 == 0 || t >= (std::uint64_t(1) << s))
        throw std::invalid_argument("check_window_count: need 0 <= r < s, odd t < 2^s");
    std::uint64_t base = t << s;
    std::uint64_t len = std::uint64_t(1) << r;
    static const ThetaTriple target{0, 0, 1};
    WindowCountReport rep;
    for (std::uint64_t n = base + 1; n <= base + len; ++n)
        if (theta_direct(n) == target) ++rep.count;
    double diff = std::abs(static_cast<double>(8 * rep.count) -
                           static_cast<double>(len)) / 8.0;
    rep.deviation = diff / std::sqrt(static_cast<double>(len));
    return rep;
}

std::array<std::uint64_t, 8> triple_counts(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("triple_counts: n >= 1 required");
    std::array<std::uint64_t, 8> counts{};
    for (std::uint64_t r = 1; r <= n; ++r) {
        ThetaTriple t = theta_direct(r);
        counts[4 * t.t1 + 2 * t.t2 + t.t3] += 1;
    }
    return counts;
}

}  // namespace factoromata
