#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sipq/marker_poly.hpp"
#include "sipq/qseries.hpp"

namespace sipq {

/// A partition class of the threshold/gap kind: parts congruent to r mod k
/// are at least c_r, and a part congruent to r exceeds its predecessor by at
/// least d_r. Residues run over 1..k, so the part k sits in residue k.
class SipClassSpec {
 public:
  SipClassSpec(int k, std::vector<int> c, std::vector<int> d, std::string name = "");

  int k() const noexcept { return k_; }
  /// Threshold and gap of residue r in 1..k.
  int c(int r) const { return c_.at(static_cast<std::size_t>(r - 1)); }
  int d(int r) const { return d_.at(static_cast<std::size_t>(r - 1)); }
  const std::vector<int>& thresholds() const noexcept { return c_; }
  const std::vector<int>& gaps() const noexcept { return d_; }
  const std::string& name() const noexcept { return name_; }
  int residue(int part) const { return ((part - 1) % k_ + k_) % k_ + 1; }

  /// Per-residue marker weights; empty for the plain class.
  SipClassSpec with_weights(std::vector<MarkerPoly> weights, MarkerRegistry markers) const;
  bool weighted() const noexcept { return !weights_.empty(); }
  const MarkerRegistry& markers() const noexcept { return markers_; }
  /// Weight of a part of size h (the constant 1 when unweighted).
  MarkerPoly weight(int h) const;

  static SipClassSpec natural();
  static SipClassSpec distinct();
  static SipClassSpec rogers_ramanujan();
  static SipClassSpec gollnitz_gordon();
  static SipClassSpec schur();
  /// Schur's class with u marking parts = 0, 1 mod 3 and v marking 0, 2 mod 3.
  static SipClassSpec schur_refined();
  static SipClassSpec glasgow();
  static std::vector<SipClassSpec> presets();

  /// Accepts a preset name or "k=K,c=C1:C2:..,d=D1:D2:..".
  static SipClassSpec parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const SipClassSpec& a, const SipClassSpec& b) {
    return a.k_ == b.k_ && a.c_ == b.c_ && a.d_ == b.d_;
  }

 private:
  int k_;
  std::vector<int> c_;
  std::vector<int> d_;
  std::string name_;
  std::vector<MarkerPoly> weights_;
  MarkerRegistry markers_;
};

}  // namespace sipq
