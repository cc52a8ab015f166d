#include "cdf/intervals.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>

namespace cdf {
namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// Integer range [lo, hi] of the free variable; hi == kInf means unbounded.
struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = kInf;

  bool empty() const { return lo > hi; }
};

// Restricts r to the values x with e(x) >= 0.
Range where_nonneg(LinearExpr e, Range r) {
  if (r.empty()) return r;
  if (e.p == 0) {
    if (e.q < 0) r.hi = r.lo - 1;
    return r;
  }
  if (e.p > 0) {
    r.lo = std::max(r.lo, ceil_div(-e.q, e.p));
  } else {
    r.hi = std::min(r.hi, floor_div(e.q, -e.p));
  }
  return r;
}

// e(x) >= c for every x in r.
bool always_at_least(LinearExpr e, std::int64_t c, Range r) {
  if (r.empty()) return true;
  return where_nonneg(LinearExpr{-e.p, c - 1 - e.q}, r).empty();
}

struct Raw {
  LinearExpr base;
  int coeff;
};

// Endpoints of base + coeff*i over i in [ilo, ihi].
IntervalExpr sweep(LinearExpr base, int coeff, LinearExpr ilo, LinearExpr ihi) {
  LinearExpr a = base + static_cast<std::int64_t>(coeff) * ilo;
  LinearExpr b = base + static_cast<std::int64_t>(coeff) * ihi;
  if (coeff < 0) std::swap(a, b);
  return IntervalExpr{a, b, std::abs(coeff)};
}

// t = 6u + r.
LinearExpr in_class(LinearExpr e, std::int64_t r) { return LinearExpr{6 * e.p, e.p * r + e.q}; }

}  // namespace

std::string to_string(LinearExpr e) {
  std::string out;
  if (e.p != 0) {
    if (e.p == -1) out = "-";
    else if (e.p != 1) out = std::to_string(e.p);
    out += "t";
    if (e.q > 0) out += "+" + std::to_string(e.q);
    else if (e.q < 0) out += std::to_string(e.q);
    return out;
  }
  return std::to_string(e.q);
}

std::string to_string(const IntervalExpr& e) {
  std::string out = "[" + to_string(e.lo) + "," + to_string(e.hi) + "]";
  if (e.step != 1) out += "_" + std::to_string(e.step);
  return out;
}

std::string difference_to_string(const DifferenceEntry& e) {
  std::string out;
  const bool has_base = !(e.base.p == 0 && e.base.q == 0);
  if (has_base) out = to_string(e.base);
  const int c = e.index_coeff;
  if (c == 0) return has_base ? out : "0";
  if (c < 0) out += "-";
  else if (has_base) out += "+";
  if (std::abs(c) != 1) out += std::to_string(std::abs(c));
  out += "i";
  return out;
}

IntervalReport interval_report(std::span<const BlockForm> forms, LinearExpr modulus, std::int64_t threshold) {
  IntervalReport report;
  const Range domain{threshold, kInf};

  for (std::size_t f = 0; f < forms.size(); ++f) {
    const auto& form = forms[f];
    const Range nonempty = where_nonneg(form.index_hi - form.index_lo, domain);
    const std::array<Raw, 3> elems{Raw{form.first, 1}, Raw{form.second, 2}, Raw{form.third, 3}};
    std::array<Raw, 6> raw{elems[0], elems[1], elems[2]};
    const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      const auto [x, y] = pairs[j];
      raw[3 + j] = Raw{elems[x].base - elems[y].base, elems[x].coeff - elems[y].coeff};
    }

    for (std::size_t j = 0; j < raw.size(); ++j) {
      DifferenceEntry entry;
      entry.form = f;
      entry.base = raw[j].base;
      entry.index_coeff = raw[j].coeff;
      entry.positive = sweep(entry.base, entry.index_coeff, form.index_lo, form.index_hi);
      if (nonempty.empty()) {
        entry.empty = true;
      } else if (!always_at_least(entry.positive.lo, 1, nonempty)) {
        // Pairwise differences may need the opposite orientation.
        DifferenceEntry flipped = entry;
        flipped.base = LinearExpr{-entry.base.p, -entry.base.q};
        flipped.index_coeff = -entry.index_coeff;
        flipped.positive = sweep(flipped.base, flipped.index_coeff, form.index_lo, form.index_hi);
        if (j >= 3 && always_at_least(flipped.positive.lo, 1, nonempty)) entry = flipped;
        else entry.straddles = true;
      }
      if (!entry.empty && !entry.straddles) {
        // Must stay below v, then fold anything above (v-1)/2.
        if (!always_at_least(modulus - entry.positive.hi, 1, nonempty)) {
          entry.straddles = true;
        } else if (always_at_least(2 * entry.positive.lo - modulus, 0, nonempty)) {
          entry.folded = IntervalExpr{modulus - entry.positive.hi, modulus - entry.positive.lo, entry.positive.step};
        } else if (!always_at_least(modulus - 2 * entry.positive.hi, 1, nonempty)) {
          entry.straddles = true;
        }
      }
      if (entry.empty || entry.straddles) report.flagged.push_back(report.entries.size());
      report.entries.push_back(entry);
    }
  }

  for (std::size_t a = 0; a < report.entries.size(); ++a) {
    if (report.entries[a].straddles) {
      report.disjoint = false;
      if (!report.overlap) report.overlap = std::make_pair(a, a);
    }
  }

  auto index_range = [&](std::size_t e) { return forms[report.entries[e].form]; };
  for (std::size_t a = 0; a < report.entries.size() && !report.overlap; ++a) {
    const auto& ea = report.entries[a];
    if (ea.empty) continue;
    const IntervalExpr ia = ea.folded.value_or(ea.positive);
    for (std::size_t b = a + 1; b < report.entries.size() && !report.overlap; ++b) {
      const auto& eb = report.entries[b];
      if (eb.empty) continue;
      const IntervalExpr ib = eb.folded.value_or(eb.positive);
      const auto g = std::gcd(ia.step, ib.step);
      const LinearExpr offset = ia.lo - ib.lo;
      for (std::int64_t r = 0; r < 6; ++r) {
        // Within t = 6u + r the offset mod gcd(step) is the constant offset(r).
        if (((offset.at(r) % g) + g) % g != 0) continue;
        Range u{ceil_div(threshold - r, 6), kInf};
        const auto fa = index_range(a);
        const auto fb = index_range(b);
        u = where_nonneg(in_class(fa.index_hi - fa.index_lo, r), u);
        u = where_nonneg(in_class(fb.index_hi - fb.index_lo, r), u);
        u = where_nonneg(in_class(ib.hi - ia.lo, r), u);
        u = where_nonneg(in_class(ia.hi - ib.lo, r), u);
        if (!u.empty()) {
          report.disjoint = false;
          report.overlap = std::make_pair(a, b);
          report.overlap_t = 6 * u.lo + r;
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace cdf
