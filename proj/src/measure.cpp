#include "zcross/measure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace zcross {

namespace {

void format17(char* buf, std::size_t n, double v) { std::snprintf(buf, n, "%.17g", v); }

}  // namespace

SignedAtomMeasure canonicalize(std::vector<Atom> raw, Interval interval, double cemetery_mass) {
  for (const Atom& a : raw) {
    if (!std::isfinite(a.position) || !std::isfinite(a.weight))
      throw InvalidInput("canonicalize: non-finite atom position or weight");
  }
  if (!(cemetery_mass >= 0.0))
    throw InvalidInput("canonicalize: cemetery mass must be nonnegative");
  std::sort(raw.begin(), raw.end(),
            [](const Atom& a, const Atom& b) { return a.position < b.position; });
  SignedAtomMeasure out;
  out.interval = interval;
  out.cemetery_mass = cemetery_mass;
  out.atoms.reserve(raw.size());
  std::size_t i = 0;
  while (i < raw.size()) {
    double pos = raw[i].position;
    double w = 0.0;
    while (i < raw.size() && raw[i].position == pos) {
      w += raw[i].weight;
      ++i;
    }
    if (w != 0.0) out.atoms.push_back({pos, w});
  }
  return out;
}

SignedAtomMeasure to_signed(const ParticleMeasure& nu) {
  std::vector<Atom> raw;
  raw.reserve(nu.entries.size());
  for (const ParticleEntry& e : nu.entries)
    raw.push_back({e.position, static_cast<double>(e.sign)});
  return canonicalize(std::move(raw), nu.interval,
                      static_cast<double>(nu.cemetery_plus + nu.cemetery_minus));
}

ParticleMeasure particles_from_signed(const SignedAtomMeasure& mu, double tol) {
  ParticleMeasure nu;
  nu.interval = mu.interval;
  std::int32_t next_plus = 1, next_minus = 1;
  for (const Atom& a : mu.atoms) {
    double r = std::round(a.weight);
    if (std::abs(a.weight - r) > tol || r == 0.0)
      throw InvalidInput("particles_from_signed: atom weight is not a nonzero integer");
    int count = static_cast<int>(std::abs(r));
    std::int8_t s = r > 0 ? std::int8_t{+1} : std::int8_t{-1};
    for (int k = 0; k < count; ++k) {
      std::int32_t idx = s > 0 ? next_plus++ : next_minus++;
      nu.entries.push_back({a.position, s, idx});
    }
  }
  return nu;
}

SignedAtomMeasure negate(const SignedAtomMeasure& mu) {
  SignedAtomMeasure out = mu;
  for (Atom& a : out.atoms) a.weight = -a.weight;
  return out;
}

SignedAtomMeasure scale(const SignedAtomMeasure& mu, double c) {
  if (!(c > 0.0)) throw InvalidInput("scale: factor must be positive");
  SignedAtomMeasure out = mu;
  for (Atom& a : out.atoms) a.weight *= c;
  out.cemetery_mass *= c;
  return out;
}

SignSeq sign_sequence(const ParticleMeasure& nu) {
  std::vector<ParticleEntry> sorted = nu.entries;
  std::sort(sorted.begin(), sorted.end(),
            [](const ParticleEntry& a, const ParticleEntry& b) {
              if (a.position != b.position) return a.position < b.position;
              if (a.sign != b.sign) return a.sign > b.sign;
              return a.index < b.index;
            });
  SignSeq seq;
  seq.entries.reserve(sorted.size());
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (sorted[i].position == sorted[i + 1].position && sorted[i].sign != sorted[i + 1].sign)
      throw InvariantViolation("sign_sequence: coincident opposite-sign particles");
  }
  for (const ParticleEntry& e : sorted) seq.entries.push_back(e.sign);
  return seq;
}

int sigma(const SignSeq& a) {
  if (a.entries.empty()) return -1;
  int alternations = 0;
  for (std::size_t i = 0; i + 1 < a.entries.size(); ++i)
    if (a.entries[i] != a.entries[i + 1]) ++alternations;
  return alternations;
}

bool is_subsequence(const SignSeq& a, const SignSeq& b) {
  std::size_t i = 0;
  for (std::size_t j = 0; i < a.entries.size() && j < b.entries.size(); ++j)
    if (a.entries[i] == b.entries[j]) ++i;
  return i == a.entries.size();
}

int crossings(const SignedAtomMeasure& mu) {
  // Block-sign collapse: runs of same-signed atoms contribute one entry each.
  int blocks = 0;
  int prev = 0;
  for (const Atom& a : mu.atoms) {
    int s = a.weight > 0 ? +1 : -1;
    if (s != prev) {
      ++blocks;
      prev = s;
    }
  }
  return blocks - 1;
}

int crossings(const ParticleMeasure& nu) { return crossings(to_signed(nu)); }

namespace {

// Does an increasing atom tuple of length n with alternating signs starting
// at `first_sign` exist?  Depth-first over positions left to right.
bool alternating_tuple_exists(const std::vector<int>& signs, std::size_t start, int want,
                              std::size_t remaining) {
  if (remaining == 0) return true;
  for (std::size_t i = start; i + remaining <= signs.size(); ++i) {
    if (signs[i] == want && alternating_tuple_exists(signs, i + 1, -want, remaining - 1))
      return true;
  }
  return false;
}

}  // namespace

int crossings_bruteforce(const SignedAtomMeasure& mu, std::size_t n_max, BruteforceMode mode) {
  if (mu.atoms.size() > n_max)
    throw OverflowSignal("crossings_bruteforce: atom count exceeds n_max");
  std::vector<int> signs;
  signs.reserve(mu.atoms.size());
  for (const Atom& a : mu.atoms) signs.push_back(a.weight > 0 ? +1 : -1);

  if (mode == BruteforceMode::kEnumerateTuples) {
    for (std::size_t n = signs.size(); n >= 1; --n) {
      if (alternating_tuple_exists(signs, 0, +1, n) ||
          alternating_tuple_exists(signs, 0, -1, n))
        return static_cast<int>(n) - 1;
    }
    return -1;
  }

  // Longest alternating subsequence ending at i with the sign of atom i.
  std::size_t n = signs.size();
  if (n == 0) return -1;
  std::vector<int> best(n, 1);
  int overall = 1;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (signs[j] != signs[i] && best[j] + 1 > best[i]) best[i] = best[j] + 1;
    overall = std::max(overall, best[i]);
  }
  return overall - 1;
}

namespace {

double tent_value(double x, double lo, double hi) {
  if (lo == hi) return x == lo ? 1.0 : 0.0;
  if (x <= lo || x >= hi) return 0.0;
  double c = 0.5 * (lo + hi);
  return x <= c ? (x - lo) / (c - lo) : (hi - x) / (hi - c);
}

}  // namespace

int bump_alternation(const SignedAtomMeasure& mu,
                     const std::vector<std::pair<double, double>>& intervals) {
  for (std::size_t k = 0; k < intervals.size(); ++k) {
    if (!(intervals[k].first <= intervals[k].second))
      throw InvalidInput("bump_alternation: interval bounds out of order");
    if (k + 1 < intervals.size() && !(intervals[k].second < intervals[k + 1].first))
      throw InvalidInput("bump_alternation: intervals must be disjoint and increasing");
  }
  int alternations = 0;
  int prev = 0;
  for (const auto& [lo, hi] : intervals) {
    double integral = 0.0;
    for (const Atom& a : mu.atoms) integral += a.weight * tent_value(a.position, lo, hi);
    if (integral == 0.0) continue;
    int s = integral > 0 ? +1 : -1;
    if (prev != 0 && s != prev) ++alternations;
    prev = s;
  }
  return alternations;
}

int grid_crossings(const GridFunction& u, double zero_tol) {
  if (zero_tol < 0.0) zero_tol = 0.0;
  int blocks = 0;
  int prev = 0;
  for (double v : u.values) {
    if (std::abs(v) <= zero_tol) continue;
    int s = v > 0 ? +1 : -1;
    if (s != prev) {
      ++blocks;
      prev = s;
    }
  }
  return blocks - 1;
}

void write_measure_csv(std::ostream& os, const SignedAtomMeasure& mu) {
  char a[40], b[40];
  os << "position,weight\n";
  for (const Atom& at : mu.atoms) {
    format17(a, sizeof a, at.position);
    format17(b, sizeof b, at.weight);
    os << a << ',' << b << '\n';
  }
  format17(a, sizeof a, mu.cemetery_mass);
  os << "# cemetery_mass=" << a << '\n';
}

SignedAtomMeasure read_measure_csv(std::istream& is) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<Atom> raw;
  double cemetery = 0.0;
  bool header_seen = false;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      const char* tag = "# cemetery_mass=";
      if (line.rfind(tag, 0) == 0) cemetery = std::strtod(line.c_str() + std::strlen(tag), nullptr);
      continue;
    }
    if (!header_seen) {
      if (line.rfind("position", 0) != 0)
        throw ParseError("measure csv: missing position,weight header", 0, lineno);
      header_seen = true;
      continue;
    }
    const char* s = line.c_str();
    char* end = nullptr;
    double pos = std::strtod(s, &end);
    if (end == s || *end != ',')
      throw ParseError("measure csv: expected position,weight", 0, lineno);
    s = end + 1;
    double w = std::strtod(s, &end);
    if (end == s) throw ParseError("measure csv: bad weight field", 0, lineno);
    raw.push_back({pos, w});
  }
  return canonicalize(std::move(raw), whole_line(), cemetery);
}

void write_grid_csv(std::ostream& os, const GridFunction& u) {
  char t[40], x[40], v[40];
  os << "t,x,u\n";
  format17(t, sizeof t, u.time);
  for (std::size_t i = 0; i < u.values.size(); ++i) {
    format17(x, sizeof x, u.x_at(i));
    format17(v, sizeof v, u.values[i]);
    os << t << ',' << x << ',' << v << '\n';
  }
}

}  // namespace zcross
