#include "ccheb/search.hpp"

#include <algorithm>
#include <cmath>

namespace ccheb {

std::size_t default_grid_size(std::size_t n_basis) {
  return std::max<std::size_t>(4096, 64 * n_basis);
}

MaxSearch::MaxSearch(SearchDomain domain, std::size_t grid_size,
                     std::span<const Scalar> singular_params, int refine_digits, double window)
    : domain_(std::move(domain)), window_(window) {
  if (grid_size < 3) throw InvalidArgument("search grid needs at least 3 nodes");
  if (!(domain_.hi > domain_.lo)) throw InvalidArgument("empty search domain");
  step_ = domain_.length() / Scalar(static_cast<long>(grid_size));
  const int digits = std::min(refine_digits, working_digits() / 2);
  width_ = min(Scalar::pow10(-digits), step_);

  // Singular parameters, folded into the domain when it wraps.
  std::vector<Scalar> singular;
  for (const auto& s : singular_params) {
    Scalar t = s;
    if (domain_.periodic) t = domain_.lo + (t - domain_.lo) - floor(t - domain_.lo);
    if (t >= domain_.lo && t <= domain_.hi) singular.push_back(std::move(t));
  }

  const Scalar half(0.5);
  const Scalar near = step_ / Scalar(1000);
  nodes_.reserve(grid_size);
  for (std::size_t i = 0; i < grid_size; ++i) {
    Scalar t = domain_.lo + (Scalar(static_cast<long>(i)) + half) * step_;
    for (const auto& s : singular) {
      if (abs(t - s) < near) {
        t += step_ / Scalar(4);
        break;
      }
    }
    nodes_.push_back(std::move(t));
  }

  extra_points_ = singular;
  if (!domain_.periodic) {
    extra_points_.push_back(domain_.lo);
    extra_points_.push_back(domain_.hi);
  }
}

Scalar MaxSearch::golden_section(const ErrorFunction& err, Scalar a, Scalar b,
                                 Scalar& best) const {
  static thread_local mpfr_prec_t cached_bits = 0;
  static thread_local Scalar inv_phi;
  if (cached_bits != working_bits()) {
    inv_phi = (sqrt(Scalar(5)) - Scalar(1)) / Scalar(2);
    cached_bits = working_bits();
  }
  Scalar c = b - (b - a) * inv_phi;
  Scalar d = a + (b - a) * inv_phi;
  Scalar fc = norm(err(c));
  Scalar fd = norm(err(d));
  while (b - a > width_) {
    if (fc >= fd) {
      b = std::move(d);
      d = c;
      fd = fc;
      c = b - (b - a) * inv_phi;
      fc = norm(err(c));
    } else {
      a = std::move(c);
      c = d;
      fc = fd;
      d = a + (b - a) * inv_phi;
      fd = norm(err(d));
    }
  }
  if (fc >= fd) {
    best = std::move(fc);
    return c;
  }
  best = std::move(fd);
  return d;
}

Extremum MaxSearch::find(const ErrorFunction& err) const {
  std::vector<Scalar> norms;
  norms.reserve(nodes_.size());
  for (const auto& t : nodes_) norms.push_back(norm(err(t)));
  return find(err, norms);
}

Extremum MaxSearch::find(const ErrorFunction& err, std::span<const Scalar> grid_norms) const {
  const std::size_t g = nodes_.size();
  if (grid_norms.size() != g) throw InvalidArgument("grid values do not match search grid");

  std::size_t imax = 0;
  for (std::size_t i = 1; i < g; ++i)
    if (grid_norms[i] > grid_norms[imax]) imax = i;
  const double keep = (1.0 - window_) * (1.0 - window_);
  const Scalar cutoff = grid_norms[imax] * Scalar(keep);

  std::vector<std::size_t> candidates{imax};
  for (std::size_t i = 0; i < g; ++i) {
    if (i == imax || grid_norms[i] < cutoff) continue;
    const bool has_left = domain_.periodic || i > 0;
    const bool has_right = domain_.periodic || i + 1 < g;
    const Scalar& left = grid_norms[i == 0 ? g - 1 : i - 1];
    const Scalar& right = grid_norms[i + 1 == g ? 0 : i + 1];
    if (has_left && !(grid_norms[i] > left)) continue;
    if (has_right && !(grid_norms[i] >= right)) continue;
    candidates.push_back(i);
  }

  const Scalar tie = Scalar::epsilon() * Scalar(1 << 20);
  bool have_best = false;
  Scalar best_x, best_norm;
  auto consider = [&](Scalar x, Scalar v) {
    if (domain_.periodic) x = domain_.lo + (x - domain_.lo) - floor(x - domain_.lo);
    if (!have_best) {
      best_x = std::move(x);
      best_norm = std::move(v);
      have_best = true;
      return;
    }
    const Scalar gap = v - best_norm;
    const Scalar scale = tie * max(best_norm, v);
    if (gap > scale || (abs(gap) <= scale && x < best_x)) {
      best_x = std::move(x);
      best_norm = std::move(v);
    }
  };

  for (std::size_t i : candidates) {
    consider(nodes_[i], grid_norms[i]);
    // Flat to rounding level around the node: nothing to refine.
    const Scalar& left = grid_norms[i == 0 ? (domain_.periodic ? g - 1 : i) : i - 1];
    const Scalar& right = grid_norms[i + 1 == g ? (domain_.periodic ? 0 : i) : i + 1];
    if (grid_norms[i] - min(left, right) <= tie * grid_norms[i]) continue;
    Scalar a, b;
    if (domain_.periodic) {
      a = nodes_[i] - step_;
      b = nodes_[i] + step_;
    } else {
      a = i == 0 ? domain_.lo : nodes_[i - 1];
      b = i + 1 == g ? domain_.hi : nodes_[i + 1];
    }
    Scalar v;
    Scalar x = golden_section(err, std::move(a), std::move(b), v);
    consider(std::move(x), std::move(v));
  }
  for (const auto& t : extra_points_) consider(t, norm(err(t)));

  Extremum out;
  out.err = err(best_x);
  out.x = std::move(best_x);
  out.value = abs(out.err);
  out.theta = phase_0_2pi(out.err);
  return out;
}

Extremum global_max_search(const ErrorFunction& err, std::span<const Scalar> singular_params,
                           const SearchOptions& options, const SearchDomain& domain) {
  const std::size_t g = options.grid_size == 0 ? default_grid_size(0) : options.grid_size;
  MaxSearch search(domain, g, singular_params, options.refine_digits, options.window);
  return search.find(err);
}

}  // namespace ccheb
