#include "zeta_arr/fan.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "zeta_arr/errors.hpp"

namespace zeta_arr {

namespace {

// Every w >= lower with Σ u_i w_i = degree, first coordinate descending.
void compositions(const WeightVector& u, std::int64_t degree, std::int64_t lower,
                  const std::function<void(const WeightVector&)>& emit) {
  const std::size_t n = u.size();
  std::int64_t floor_total = 0;
  for (std::int64_t ui : u) floor_total += ui * lower;
  if (floor_total > degree) return;
  WeightVector w(n, lower);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t rest) {
    // rest is the degree still to distribute above the lower bound
    if (i + 1 == n) {
      if (rest % u[i] != 0) return;
      w[i] = lower + rest / u[i];
      emit(w);
      return;
    }
    for (std::int64_t extra = rest / u[i]; extra >= 0; --extra) {
      w[i] = lower + extra;
      rec(i + 1, rest - extra * u[i]);
    }
    w[i] = lower;
  };
  rec(0, degree - floor_total);
}

}  // namespace

std::int64_t subset_weight(const WeightVector& u, Subset s) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (subset_contains(s, static_cast<int>(i))) total += u[i];
  }
  return total;
}

std::vector<WeightVector> lattice_points(const Matroid& m, std::int64_t degree, bool strict) {
  return lattice_points(m, WeightVector(static_cast<std::size_t>(m.size()), 1), degree, strict);
}

std::vector<WeightVector> lattice_points(const Matroid& m, const WeightVector& u,
                                         std::int64_t degree, bool strict) {
  check_weight_length(m, u);
  for (std::int64_t ui : u) {
    if (ui < 1) throw PreconditionError("exponent vector entries must be positive");
  }
  if (degree < 0) throw PreconditionError("degree must be nonnegative");
  std::vector<WeightVector> points;
  compositions(u, degree, strict ? 1 : 0, [&](const WeightVector& w) {
    if (in_bergman_fan_level_sets(m, w)) points.push_back(w);
  });
  return points;
}

std::vector<FlagChain> chains(const Matroid& m) {
  std::vector<Subset> proper;
  for (const Flat& f : flats(m)) {
    if (f.elements != 0 && f.elements != full_set(m.size())) proper.push_back(f.elements);
  }
  std::vector<FlagChain> result;
  FlagChain current;
  std::function<void()> extend = [&] {
    result.push_back(current);
    const Subset last = current.flats.empty() ? 0 : current.flats.back();
    for (Subset f : proper) {
      if ((f & last) == last && f != last) {
        current.flats.push_back(f);
        current.ranks.push_back(m.rank(f));
        extend();
        current.flats.pop_back();
        current.ranks.pop_back();
      }
    }
  };
  extend();
  std::sort(result.begin(), result.end(), [](const FlagChain& a, const FlagChain& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.flats < b.flats;
  });
  return result;
}

Matroid chain_matroid(const Matroid& m, const FlagChain& chain) {
  WeightVector w(static_cast<std::size_t>(m.size()), 0);
  for (Subset g : chain.flats) {
    for (int i = 0; i < m.size(); ++i) {
      if (subset_contains(g, i)) ++w[static_cast<std::size_t>(i)];
    }
  }
  Matroid mw = initial_matroid(m, w);
  if (!mw.is_loop_free()) {
    throw PreconditionError("chain contains a non-flat: initial matroid has loops " +
                            format_subset(mw.loops()));
  }
  return mw;
}

ChainPoint decode(const Matroid& m, const WeightVector& w) {
  check_weight_length(m, w);
  for (std::int64_t wi : w) {
    if (wi < 0) throw PreconditionError("decode needs a nonnegative weight");
  }
  if (!in_bergman_fan_level_sets(m, w)) {
    throw PreconditionError("weight lies outside the Bergman fan");
  }
  ChainPoint point;
  point.c0 = *std::min_element(w.begin(), w.end());
  std::vector<std::int64_t> values(w.begin(), w.end());
  std::sort(values.begin(), values.end(), std::greater<>());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (std::size_t j = 0; j < values.size() && values[j] > point.c0; ++j) {
    Subset level = 0;
    for (int i = 0; i < m.size(); ++i) {
      if (w[static_cast<std::size_t>(i)] >= values[j]) level |= singleton(i);
    }
    point.chain.flats.push_back(level);
    point.chain.ranks.push_back(m.rank(level));
    point.c.push_back(values[j] - values[j + 1]);
  }
  return point;
}

WeightVector encode(int n, const ChainPoint& point) {
  WeightVector w(static_cast<std::size_t>(n), point.c0);
  for (std::size_t j = 0; j < point.chain.flats.size(); ++j) {
    for (int i = 0; i < n; ++i) {
      if (subset_contains(point.chain.flats[j], i)) w[static_cast<std::size_t>(i)] += point.c[j];
    }
  }
  return w;
}

bool chain_bijection_holds(const Matroid& m, const WeightVector& u, std::int64_t max_degree) {
  check_weight_length(m, u);
  const auto all_chains = chains(m);
  const std::int64_t total_u = subset_weight(u, full_set(m.size()));
  for (bool strict : {false, true}) {
    for (std::int64_t degree = 0; degree <= max_degree; ++degree) {
      std::vector<WeightVector> encoded;
      for (const FlagChain& chain : all_chains) {
        ChainPoint point{chain, 0, std::vector<std::int64_t>(chain.length(), 1)};
        WeightVector cone_u(chain.length() + 1);
        cone_u[0] = total_u;
        std::int64_t base = 0;
        for (std::size_t j = 0; j < chain.length(); ++j) {
          cone_u[j + 1] = subset_weight(u, chain.flats[j]);
          base += cone_u[j + 1];
        }
        const std::int64_t lower0 = strict ? 1 : 0;
        const std::int64_t rest = degree - base - lower0 * total_u;
        if (rest < 0) continue;
        // distribute `rest` as extra over (c0 - lower0, c_1 - 1, ...)
        compositions(cone_u, rest, 0, [&](const WeightVector& extra) {
          point.c0 = lower0 + extra[0];
          for (std::size_t j = 0; j < chain.length(); ++j) point.c[j] = 1 + extra[j + 1];
          encoded.push_back(encode(m.size(), point));
        });
      }
      std::sort(encoded.begin(), encoded.end());
      if (std::adjacent_find(encoded.begin(), encoded.end()) != encoded.end()) return false;
      auto points = lattice_points(m, u, degree, strict);
      std::sort(points.begin(), points.end());
      if (points != encoded) return false;
    }
  }
  return true;
}

}  // namespace zeta_arr
