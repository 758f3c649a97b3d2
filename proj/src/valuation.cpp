#include "graphcake/valuation.hpp"

#include <algorithm>

#include "graphcake/errors.hpp"

namespace graphcake {

EdgeDensity::EdgeDensity() : segments_{{Rational(0), Rational(0)}} {}

EdgeDensity::EdgeDensity(std::vector<DensitySegment> segments) : segments_(std::move(segments)) {
  if (segments_.empty()) throw Error(ErrorKind::kInvalidInstance, "density needs at least one segment");
  if (segments_.front().start != 0) throw Error(ErrorKind::kInvalidInstance, "first segment must start at 0");
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (segments_[i].density < 0) throw Error(ErrorKind::kInvalidInstance, "negative density");
    if (segments_[i].start >= 1) throw Error(ErrorKind::kInvalidInstance, "segment starts at or after 1");
    if (i > 0 && segments_[i].start <= segments_[i - 1].start) {
      throw Error(ErrorKind::kInvalidInstance, "segment starts must increase strictly");
    }
  }
  simplify();
}

EdgeDensity EdgeDensity::uniform(const Rational& total) { return EdgeDensity({{Rational(0), total}}); }

Rational EdgeDensity::segment_end(std::size_t i) const {
  return i + 1 < segments_.size() ? segments_[i + 1].start : Rational(1);
}

Rational EdgeDensity::integral(const Rational& lo, const Rational& hi) const {
  Rational sum = 0;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const Rational a = std::max(lo, segments_[i].start);
    const Rational b = std::min(hi, segment_end(i));
    if (a < b) sum += segments_[i].density * (b - a);
  }
  return sum;
}

EdgeDensity EdgeDensity::scaled(const Rational& factor) const {
  std::vector<DensitySegment> out = segments_;
  for (auto& s : out) s.density *= factor;
  return EdgeDensity(std::move(out));
}

EdgeDensity EdgeDensity::plus(const EdgeDensity& other) const {
  std::vector<Rational> starts;
  for (const auto& s : segments_) starts.push_back(s.start);
  for (const auto& s : other.segments_) starts.push_back(s.start);
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
  auto density_at = [](const EdgeDensity& d, const Rational& x) {
    Rational value = 0;
    for (const auto& s : d.segments_) {
      if (s.start <= x) value = s.density;
    }
    return value;
  };
  std::vector<DensitySegment> out;
  for (const Rational& x : starts) out.push_back({x, density_at(*this, x) + density_at(other, x)});
  return EdgeDensity(std::move(out));
}

EdgeDensity EdgeDensity::pulled_back(const Rational& from, const Rational& to) const {
  if (from == to) return EdgeDensity();
  const Rational lo = std::min(from, to);
  const Rational hi = std::max(from, to);
  const Rational span = hi - lo;
  // Pieces of [lo, hi] in increasing edge order, then re-expressed along from -> to.
  std::vector<std::pair<Rational, Rational>> parts;  // (part start in [0,1], density)
  std::vector<Rational> ends;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const Rational a = std::max(lo, segments_[i].start);
    const Rational b = std::min(hi, segment_end(i));
    if (a >= b) continue;
    parts.emplace_back((a - lo) / span, segments_[i].density * span);
    ends.push_back((b - lo) / span);
  }
  std::vector<DensitySegment> out;
  if (from < to) {
    for (auto& [start, density] : parts) out.push_back({start, density});
  } else {
    for (std::size_t i = parts.size(); i-- > 0;) out.push_back({1 - ends[i], parts[i].second});
  }
  return EdgeDensity(std::move(out));
}

void EdgeDensity::simplify() {
  std::vector<DensitySegment> merged;
  for (auto& s : segments_) {
    if (!merged.empty() && merged.back().density == s.density) continue;
    merged.push_back(std::move(s));
  }
  segments_ = std::move(merged);
}

bool operator==(const EdgeDensity& a, const EdgeDensity& b) {
  if (a.segments_.size() != b.segments_.size()) return false;
  for (std::size_t i = 0; i < a.segments_.size(); ++i) {
    if (a.segments_[i].start != b.segments_[i].start || a.segments_[i].density != b.segments_[i].density) {
      return false;
    }
  }
  return true;
}

Valuation Valuation::per_edge_uniform(const std::vector<Rational>& edge_values) {
  std::vector<EdgeDensity> per_edge;
  for (const Rational& v : edge_values) per_edge.push_back(EdgeDensity::uniform(v));
  return Valuation(std::move(per_edge));
}

Rational Valuation::total() const {
  Rational sum = 0;
  for (const auto& d : per_edge_) sum += d.total();
  return sum;
}

Valuation Valuation::scaled(const Rational& factor) const {
  std::vector<EdgeDensity> out;
  for (const auto& d : per_edge_) out.push_back(d.scaled(factor));
  return Valuation(std::move(out));
}

Valuation Valuation::plus(const Valuation& other) const {
  if (other.edge_count() != edge_count()) throw Error(ErrorKind::kInvalidInstance, "valuations differ in edge count");
  std::vector<EdgeDensity> out;
  for (EdgeIndex e = 0; e < edge_count(); ++e) out.push_back(per_edge_[e].plus(other.per_edge_[e]));
  return Valuation(std::move(out));
}

void validate_instance(const Instance& inst) {
  if (inst.agents.empty()) throw Error(ErrorKind::kInvalidInstance, "instance has no agents");
  for (std::size_t i = 0; i < inst.agents.size(); ++i) {
    const Valuation& v = inst.agents[i];
    if (v.edge_count() != inst.graph.edge_count()) {
      throw Error(ErrorKind::kInvalidInstance, "agent " + std::to_string(i + 1) + " does not cover every edge");
    }
    if (v.total() != 1) {
      throw Error(ErrorKind::kInvalidInstance,
                  "agent " + std::to_string(i + 1) + " totals " + format_rational(v.total()) + ", not 1");
    }
  }
}

Rational value_of_piece(const Valuation& v, const Piece& p) {
  Rational sum = 0;
  for (const Interval& iv : p.intervals()) {
    if (iv.edge >= v.edge_count()) {
      throw Error(ErrorKind::kUnknownEdge, "edge index " + std::to_string(iv.edge) + " not in valuation");
    }
    sum += v.edge(iv.edge).integral(iv.lo, iv.hi);
  }
  return sum;
}

Piece KnifeTrajectory::covered() const {
  std::vector<Interval> out;
  for (const KnifeLeg& leg : legs) out.push_back({leg.edge, std::min(leg.from, leg.to), std::max(leg.from, leg.to)});
  return Piece(std::move(out));
}

namespace {

Rational leg_length(const KnifeLeg& leg) { return abs(leg.to - leg.from); }

Interval leg_part(const KnifeLeg& leg, const Rational& a, const Rational& b) {
  return Interval{leg.edge, std::min(a, b), std::max(a, b)};
}

}  // namespace

Rational leg_progress(const KnifeTrajectory& t, const KnifeStop& stop) {
  Rational travelled = 0;
  for (std::size_t i = 0; i < stop.leg; ++i) travelled += leg_length(t.legs.at(i));
  return travelled + abs(stop.position - t.legs.at(stop.leg).from);
}

bool stops_before(const KnifeTrajectory& t, const KnifeStop& a, const KnifeStop& b) {
  return leg_progress(t, a) < leg_progress(t, b);
}

Piece prefix_piece(const KnifeTrajectory& t, const KnifeStop& stop) {
  std::vector<Interval> out;
  for (std::size_t i = 0; i < stop.leg; ++i) out.push_back(leg_part(t.legs[i], t.legs[i].from, t.legs[i].to));
  const KnifeLeg& leg = t.legs.at(stop.leg);
  out.push_back(leg_part(leg, leg.from, stop.position));
  return Piece(std::move(out));
}

Piece suffix_piece(const KnifeTrajectory& t, const KnifeStop& stop) {
  std::vector<Interval> out;
  const KnifeLeg& leg = t.legs.at(stop.leg);
  out.push_back(leg_part(leg, stop.position, leg.to));
  for (std::size_t i = stop.leg + 1; i < t.legs.size(); ++i) {
    out.push_back(leg_part(t.legs[i], t.legs[i].from, t.legs[i].to));
  }
  return Piece(std::move(out));
}

KnifeStop cut_query(const Valuation& v, const KnifeTrajectory& t, const Rational& target) {
  if (t.legs.empty()) throw Error(ErrorKind::kInsufficientValue, "empty knife trajectory");
  if (target < 0) throw Error(ErrorKind::kInsufficientValue, "negative cut target");
  if (target == 0) return KnifeStop{0, t.legs[0].from};
  Rational acc = 0;
  for (std::size_t li = 0; li < t.legs.size(); ++li) {
    const KnifeLeg& leg = t.legs[li];
    if (leg.edge >= v.edge_count()) throw Error(ErrorKind::kUnknownEdge, "knife leaves the valuation's edges");
    const EdgeDensity& d = v.edge(leg.edge);
    const Rational lo = std::min(leg.from, leg.to);
    const Rational hi = std::max(leg.from, leg.to);
    if (acc + d.integral(lo, hi) < target) {
      acc += d.integral(lo, hi);
      continue;
    }
    const bool forward = leg.from <= leg.to;
    const auto& segs = d.segments();
    for (std::size_t k = 0; k < segs.size(); ++k) {
      const std::size_t i = forward ? k : segs.size() - 1 - k;
      const Rational a = std::max(lo, segs[i].start);
      const Rational b = std::min(hi, d.segment_end(i));
      if (a >= b || segs[i].density == 0) continue;
      const Rational value = segs[i].density * (b - a);
      if (acc + value >= target) {
        const Rational step = (target - acc) / segs[i].density;
        return KnifeStop{li, forward ? Rational(a + step) : Rational(b - step)};
      }
      acc += value;
    }
    throw std::logic_error("cut_query: leg value accounting is inconsistent");
  }
  throw Error(ErrorKind::kInsufficientValue,
              "target " + format_rational(target) + " exceeds trajectory value " + format_rational(acc));
}

Valuation restrict_valuation(const Valuation& v, const CoordinateMap& map) {
  std::vector<EdgeDensity> out;
  for (const EdgeImage& img : map.images()) out.push_back(v.edge(img.edge).pulled_back(img.from, img.to));
  return Valuation(std::move(out));
}

Valuation restrict_and_renormalize(const Valuation& v, const Piece& p, const CoordinateMap& map) {
  const Rational value = value_of_piece(v, p);
  if (value == 0) throw Error(ErrorKind::kZeroValuePiece, "agent values the piece at 0");
  return restrict_valuation(v, map).scaled(1 / value);
}

Rational evaluate(const Valuation& v, const Piece& p, QueryLog& log) {
  ++log.evaluations;
  return value_of_piece(v, p);
}

KnifeStop cut(const Valuation& v, const KnifeTrajectory& t, const Rational& target, QueryLog& log) {
  ++log.cuts;
  return cut_query(v, t, target);
}

}  // namespace graphcake
