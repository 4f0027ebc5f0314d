#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sipq/qseries.hpp"

namespace sipq {

/// Tags for the explicit b(n, h) formulas and summation identities.
enum class ClosedFormId {
  gollnitz,             // b(n, 2n+2h-1) for the Gollnitz-Gordon basis
  schur_minus1,         // b(n, 3n+3h-1) for the refined Schur basis
  schur_minus2,         // b(n, 3n+3h-2)
  schur_zero,           // b(n, 3n+3h)
  schur_combined,       // (1+uq) b(n, 3n+3h-1) + b(n, 3n+3h+1)
  glasgow_plus1,        // b(n, 4h+1) for the Glasgow basis
  glasgow_zero,         // b(n, 4h)
  glasgow_minus1,       // b(n, 4h-1)
  glasgow_minus2,       // b(n, 4h-2)
  glasgow_row_sums,     // the four residue-class row sums
  chu_vandermonde,      // base-q^3 q-Chu-Vandermonde
  reciprocal_pochhammer // sum of binomial pairs over (q^3;q^3)_{n+s}
};

std::string to_string(ClosedFormId id);
std::vector<ClosedFormId> all_closed_forms();

/// q^{n^2+h^2+2h} [n-1, h]_2; n >= 1, h >= 0.
QSeries gollnitz_closed(int n, int h);

enum class SchurBranch { minus1, minus2, zero };

/// Schur basis entries with u, v markers; n >= 1.
///  minus1: b(n, 3n+3h-1), the double sum over j, i.
///  minus2: b(n, 3n+3h-2) = (1+uq) sum_{j=0}^{n-h+1} sum_i v^{n-j} u^{j+h-i}
///          q^{n(3n+1)/2+h(3h+5)/2+i(3i-5)/2-j} [n-j-1,h-1]_3 [j+h-i,h]_3 [h-1,i-1]_3
///          for h >= 1, and u^n q^{n(3n-1)/2} at h = 0.
///  zero:   b(n, 3n+3h) = uq b(n, 3n+3h-1).
QSeries schur_closed(int n, int h, SchurBranch branch);

/// Residue class of the largest part: 4h+1, 4h, 4h-1, 4h-2.
enum class GlasgowClass { plus1, zero, minus1, minus2 };

/// Glasgow basis entries; n >= 2.
///  4h+1: q^{2n+2h^2+h}   [n-2, h-1]_4
///  4h:   q^{4n-4+2h^2+h} [n-2, h-1]_4
///  4h-1: q^{4n+2h^2-3h}  [n-2, h-2]_4
///  4h-2: q^{2n-3+2h^2+h} [n-2, h-1]_4
QSeries glasgow_closed(int n, int h, GlasgowClass cls);

/// Row sums over h of the four classes, each q^e (-q^7; q^4)_{n-2} with
/// e = 2n+3, 4n-1, 4n+2, 2n respectively; n >= 2.
struct GlasgowRowSums {
  QSeries plus1, zero, minus1, minus2;
  QSeries total() const { return plus1 + zero + minus1 + minus2; }
};
GlasgowRowSums glasgow_row_sums(int n);

/// (1+uq) b(n, 3n+3h-1) + b(n, 3n+3h+1) as the double sum with three
/// Gaussian binomials; n >= 1, h >= -1. At h = -1 the j = n term carries the
/// boundary value [-1, -1]_3 = 1.
QSeries combined_row_formula(int n, int h);

/// Both sides of the base-q^3 q-Chu-Vandermonde sum agree; s >= 1.
bool chu_vandermonde_check(int r, int s, int n);

/// sum_n [r,n]_3 [n+s,r]_3 q^{3n^2+3n(s-r)} / (q^3;q^3)_{n+s}
/// equals 1/((q^3;q^3)_r (q^3;q^3)_s) to `trunc`.
bool reciprocal_pochhammer_check(int r, int s, std::size_t trunc);

/// The u^r v^s coefficient of sum_n b_S(n)/(q^3;q^3)_n, built from the
/// combined row formula, equals q^{r(3r-1)/2+s(3s+1)/2}/((q^3;q^3)_r (q^3;q^3)_s).
bool schur_coefficient_check(int r, int s, std::size_t trunc);

/// Result of comparing one closed form with the recurrence-built table.
struct ConcordanceReport {
  ClosedFormId id;
  std::size_t checked = 0;
  std::vector<std::string> mismatches;
  bool pass() const { return mismatches.empty() && checked > 0; }
};

/// Compares a closed form with the basis table for n <= max_n (or runs the
/// summation identity's exhaustive check over its stated range).
ConcordanceReport closed_form_concordance(ClosedFormId id, int max_n = 8);

}  // namespace sipq
