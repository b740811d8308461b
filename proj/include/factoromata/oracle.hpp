#pragma once
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "factoromata/bignum.hpp"
#include "factoromata/report.hpp"
#include "factoromata/seeds.hpp"

// Brute-force ground truth, independent of the automata engine: direct
// Theta computation, factorial residues, the classical three-square test,
// member/gap/density scans, and exhaustive property sweeps.
namespace factoromata {

struct FactorialResidue {
    std::uint64_t nu2 = 0;  // nu_2(n!)
    int odd_mod8 = 1;       // odd part of n! mod 8, in {1,3,5,7}
};

enum class SetId { S, Sbar };

// One gap: consecutive members start and start+length with nothing of the
// set strictly between them.
struct GapRecord {
    SetId set_id = SetId::Sbar;
    std::uint64_t start = 0;
    std::uint64_t length = 0;
};

// Quadrants of [0, 2^s): I_1 = [0, 2^{s-2}), I_2 = [2^{s-2}, 2^{s-1}),
// I_3 = [2^{s-1}, 3*2^{s-2}), I_4 = [3*2^{s-2}, 2^s).
struct QuadrantSpec {
    int s = 2;
    int j = 1;
    std::uint64_t lo() const;
    std::uint64_t hi() const;  // exclusive
};

ThetaTriple theta_direct(std::uint64_t n);
FactorialResidue factorial_residue(std::uint64_t n);

// Exact n! (fits comfortably for the n <= 25 this project needs).
BigInt factorial_exact(unsigned n);
// True iff m IS a sum of three squares, i.e. m is not 4^a(8b+7).
bool three_square_test(const BigInt& m);

// Membership bitset over [0, limit] with word-level rank for prefix counts.
struct ScanResult {
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> bits;        // bit n set iff n in Sbar
    std::vector<std::uint32_t> word_rank;   // members with value < 64*w

    bool is_member(std::uint64_t n) const;
    std::uint64_t count(std::uint64_t n) const;  // Sbar(n) = #{x <= n}
};

// Scans membership for all n <= limit by theta_direct.
ScanResult scan_members(std::uint64_t limit,
                        std::uint64_t max_limit = std::uint64_t(1) << 24);

struct GapScan {
    std::vector<GapRecord> records;  // scan order, both sets
    std::map<std::uint64_t, std::uint64_t> first_occ_s;     // length -> start
    std::map<std::uint64_t, std::uint64_t> first_occ_sbar;
    std::set<std::uint64_t> lengths_s, lengths_sbar;
};

GapScan scan_gaps(std::uint64_t limit);

struct DensityRow {
    std::uint64_t n = 0;
    std::uint64_t sbar = 0;
    long long dev8 = 0;  // 8*Sbar(n) - n
};

// Supremum of |Sbar(n) - n/8| / sqrt(n) over [floor, limit], located by
// exact cross-multiplied comparison of (8*Sbar(n) - n)^2 / n.
struct DensityProfile {
    std::uint64_t argmax = 0;
    std::uint64_t sbar_at_argmax = 0;
    long long dev8_at_argmax = 0;
    double d_value = 0.0;  // |dev8| / (8*sqrt(argmax)), display only
    std::uint64_t pos_count = 0;  // n with dev8 > 0
    std::uint64_t neg_count = 0;  // n with dev8 < 0
    std::vector<DensityRow> table;  // rows at powers of two in range
};

DensityProfile density_profile(std::uint64_t limit, std::uint64_t floor_n);

// gamma(t*2^k + i) = gamma(i) + gamma(t*2^k) (mod 2) for 1 <= k <= k_max,
// 1 <= t <= t_max, 0 <= i < 2^k.
PropertyReport check_gamma_additivity(int k_max, std::uint64_t t_max);

// For odd t and each quadrant of [0, 2^s), the residue ratio
// r(i) = res(t*2^s + i) * res(i) mod 8 is constant, where
// res(n) = 3^{alpha_3(n)} * (-1)^{alpha_5(n)} mod 8.
PropertyReport check_quadrant_constants(int s, std::uint64_t t_max);

struct WindowCountReport {
    std::uint64_t count = 0;
    double deviation = 0.0;  // |count - 2^r/8| / sqrt(2^r)
};

// Counts Sbar members in (t*2^s, t*2^s + 2^r], 0 <= r < s, t odd.
WindowCountReport check_window_count(std::uint64_t t, int s, int r);

// Exact sizes of {r <= n : Theta(r) = triple}, indexed 4*t1 + 2*t2 + t3.
std::array<std::uint64_t, 8> triple_counts(std::uint64_t n);

}  // namespace factoromata
