#include "sipq/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sipq/errors.hpp"

namespace sipq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidArgument("partition parts must be positive");
    if (i > 0 && parts_[i] < parts_[i - 1])
      throw InvalidArgument("partition parts must be listed in ascending order");
  }
}

int Partition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("bad partition part '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos)
      throw InvalidArgument("bad partition part '" + item + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "()";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "+" : "") << parts_[i];
  return os.str();
}

Overpartition::Overpartition(Partition base, std::set<int> overlined)
    : base_(std::move(base)), overlined_(std::move(overlined)) {
  for (int s : overlined_)
    if (std::find(base_.parts().begin(), base_.parts().end(), s) == base_.parts().end())
      throw InvalidArgument("overlined size " + std::to_string(s) + " is not a part");
}

std::string Overpartition::to_string() const {
  if (base_.empty()) return "()";
  std::ostringstream os;
  const auto& p = base_.parts();
  for (std::size_t i = 0; i < p.size(); ++i) {
    os << (i ? "+" : "") << p[i];
    // The overline goes on the first copy of its size.
    if (overlined_.count(p[i]) && (i == 0 || p[i - 1] != p[i])) os << "~";
  }
  return os.str();
}

namespace {

void grow(std::vector<int>& parts, int min_part, int remaining, const PartitionPredicate& keep,
          const std::function<void(const Partition&)>& visit) {
  Partition p(parts);
  if (!keep || keep(p)) visit(p);
  for (int h = min_part; h <= remaining; ++h) {
    parts.push_back(h);
    grow(parts, h, remaining - h, keep, visit);
    parts.pop_back();
  }
}

}  // namespace

void for_each_partition(int total_max, const PartitionPredicate& keep,
                        const std::function<void(const Partition&)>& visit) {
  if (total_max < 0) throw InvalidArgument("total_max must be non-negative");
  std::vector<int> parts;
  grow(parts, 1, total_max, keep, visit);
}

std::vector<Partition> enumerate_partitions(int total_max, const PartitionPredicate& keep) {
  std::vector<Partition> out;
  for_each_partition(total_max, keep, [&](const Partition& p) { out.push_back(p); });
  return out;
}

bool in_sip_class(const Partition& p, const SipClassSpec& spec) {
  const auto& parts = p.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    int r = spec.residue(parts[i]);
    if (parts[i] < spec.c(r)) return false;
    if (i > 0 && parts[i] - parts[i - 1] < spec.d(r)) return false;
  }
  return true;
}

namespace {

void grow_class(const SipClassSpec& spec, int min_gap, std::vector<int>& parts, int remaining,
                std::vector<Partition>& out) {
  out.emplace_back(parts);
  int prev = parts.empty() ? 0 : parts.back();
  int start = parts.empty() ? 1 : prev + min_gap;
  for (int h = std::max(start, 1); h <= remaining; ++h) {
    int r = spec.residue(h);
    if (h < spec.c(r)) continue;
    if (!parts.empty() && h - prev < spec.d(r)) continue;
    parts.push_back(h);
    grow_class(spec, min_gap, parts, remaining - h, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_sip_class(const SipClassSpec& spec, int total_max) {
  if (total_max < 0) throw InvalidArgument("total_max must be non-negative");
  int min_gap = *std::min_element(spec.gaps().begin(), spec.gaps().end());
  std::vector<Partition> out;
  std::vector<int> parts;
  grow_class(spec, min_gap, parts, total_max, out);
  return out;
}

std::vector<Overpartition> enumerate_overpartitions(int total_max,
                                                    const OverpartitionPredicate& keep) {
  std::vector<Overpartition> out;
  for_each_partition(total_max, {}, [&](const Partition& p) {
    std::vector<int> sizes(p.parts().begin(), p.parts().end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    std::size_t n = sizes.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::set<int> over;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) over.insert(sizes[i]);
      Overpartition o(p, std::move(over));
      if (!keep || keep(o)) out.push_back(std::move(o));
    }
  });
  return out;
}

QSeries class_series_by_enumeration(const SipClassSpec& spec, std::size_t trunc) {
  std::size_t arity = spec.markers().size();
  std::vector<MarkerPoly> c(trunc + 1, MarkerPoly(arity));
  for (const auto& p : enumerate_sip_class(spec, static_cast<int>(trunc))) {
    MarkerPoly w(1, arity);
    if (spec.weighted())
      for (int h : p.parts()) w = w * spec.weight(h);
    c[static_cast<std::size_t>(p.total())] += w;
  }
  return QSeries::polynomial(std::move(c), spec.markers()).truncated(trunc);
}

bool glasgow_condition(const Partition& p) {
  const auto& parts = p.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 2) return false;
    if (parts[i] % 2 == 0) continue;
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (j != i && parts[j] <= parts[i] && parts[i] - parts[j] < 3) return false;
  }
  return true;
}

}  // namespace sipq
