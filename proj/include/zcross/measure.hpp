#ifndef ZCROSS_MEASURE_HPP
#define ZCROSS_MEASURE_HPP

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <vector>

#include "zcross/error.hpp"

namespace zcross {

struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool contains(double x) const { return x > lo && x < hi; }
  double width() const { return hi - lo; }
};

inline Interval whole_line() { return Interval{}; }

struct Atom {
  double position = 0.0;
  double weight = 0.0;
};

// Finite signed measure as weighted atoms on an interval, in canonical form:
// atoms sorted by position, coincident atoms merged, zero weights dropped.
// Mass at the cemetery is tracked separately and never enters crossing
// counts.
struct SignedAtomMeasure {
  std::vector<Atom> atoms;
  double cemetery_mass = 0.0;
  Interval interval;

  double total_variation() const {
    double tv = 0.0;
    for (const Atom& a : atoms) tv += a.weight < 0 ? -a.weight : a.weight;
    return tv;
  }
  double total_mass() const {
    double m = 0.0;
    for (const Atom& a : atoms) m += a.weight;
    return m;
  }
  bool empty() const { return atoms.empty(); }
};

// Unit-weight signed atoms with per-sign-class indices. Entries are kept
// sorted by position; same-position same-sign ties are ordered by index.
struct ParticleEntry {
  double position = 0.0;
  std::int8_t sign = +1;
  std::int32_t index = 0;  // 1-based within its sign class
};

struct ParticleMeasure {
  std::vector<ParticleEntry> entries;
  std::int64_t cemetery_plus = 0;
  std::int64_t cemetery_minus = 0;
  Interval interval;
};

// Finite sequence over {+1, -1}; possibly empty.
struct SignSeq {
  std::vector<std::int8_t> entries;
  bool operator==(const SignSeq&) const = default;
};

// Uniform spatial grid samples of a function at one time.
struct GridFunction {
  double x0 = 0.0;
  double dx = 1.0;
  std::vector<double> values;
  double time = 0.0;

  double x_at(std::size_t i) const { return x0 + dx * static_cast<double>(i); }
};

// --- construction ---------------------------------------------------------

// Sort, merge coincident positions, drop exact-zero weights. Total signed
// mass is preserved; idempotent.
SignedAtomMeasure canonicalize(std::vector<Atom> raw,
                               Interval interval = whole_line(),
                               double cemetery_mass = 0.0);

SignedAtomMeasure to_signed(const ParticleMeasure& nu);

// Expand integer-weight atoms into unit particles; indices assigned by
// position order within each sign class. Weights must be within `tol` of
// integers.
ParticleMeasure particles_from_signed(const SignedAtomMeasure& mu, double tol = 1e-9);

SignedAtomMeasure negate(const SignedAtomMeasure& mu);
SignedAtomMeasure scale(const SignedAtomMeasure& mu, double c);

// --- sign sequences and crossing counts ------------------------------------

// Particle signs ordered by position (cemetery excluded). Coincident
// opposite-sign entries violate the canonical-form precondition.
SignSeq sign_sequence(const ParticleMeasure& nu);

// Number of sign alternations; -1 for the empty sequence, 0 for nonempty
// constant-sign sequences.
int sigma(const SignSeq& a);

// Greedy subsequence test. a <= b implies sigma(a) <= sigma(b).
bool is_subsequence(const SignSeq& a, const SignSeq& b);

// Zero-crossing count of a canonical measure: one less than the number of
// maximal same-sign blocks in position order; -1 for the zero measure.
int crossings(const SignedAtomMeasure& mu);
int crossings(const ParticleMeasure& nu);

enum class BruteforceMode {
  kEnumerateTuples,   // scan all ordered atom tuples for alternating signs
  kSubsequenceDp,     // longest alternating subsequence by dynamic programming
};

// Independent crossing counter used as a test oracle against crossings().
// Enumeration refuses inputs with more than n_max atoms rather than answer
// slowly or wrongly.
int crossings_bruteforce(const SignedAtomMeasure& mu, std::size_t n_max,
                         BruteforceMode mode = BruteforceMode::kEnumerateTuples);

// Number of strict sign alternations among tent-bump integrals mu(g_k) for
// tents supported on the given intervals (zero integrals skipped). Intervals
// must be pairwise disjoint and strictly increasing. Always <= crossings(mu).
int bump_alternation(const SignedAtomMeasure& mu,
                     const std::vector<std::pair<double, double>>& intervals);

// Sign alternations of grid values after zeroing |v| <= zero_tol; -1 when
// everything is zeroed (the zero-measure convention).
int grid_crossings(const GridFunction& u, double zero_tol);

// --- CSV snapshots ----------------------------------------------------------

// Format: header "position,weight", one row per atom with >= 17 significant
// digits, trailing "# cemetery_mass=<v>" row. Round-trips bit-exactly.
void write_measure_csv(std::ostream& os, const SignedAtomMeasure& mu);
SignedAtomMeasure read_measure_csv(std::istream& is);

void write_grid_csv(std::ostream& os, const GridFunction& u);

}  // namespace zcross

#endif
