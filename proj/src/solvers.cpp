#include "regdp/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "regdp/mdp.hpp"
#include "regdp/parallel.hpp"
#include "regdp/policy.hpp"

namespace regdp {

namespace {

// Immutable per-solve context: preference tables per signal level, plus the
// threshold grid tables for the discretized solver.
struct SweepCtx {
  const ModelParams& p;
  StateGrid grid;
  std::vector<TrapezoidPdf> pdfs;  // per y_idx

  int price_grid = 0;
  std::vector<double> grid_u;  // price_grid thresholds
  std::vector<double> surv;    // [y * price_grid + k]
  std::vector<double> util;    // [y * price_grid + k]

  // signal-move targets per (dir, y) row: flat row offsets and masses
  std::vector<std::size_t> sig_row_a, sig_row_b;
  std::vector<double> sig_mass_a, sig_mass_b;

  explicit SweepCtx(const ModelParams& params)
      : p(params), grid(state_grid(params)) {
    pdfs.reserve(p.y_levels);
    for (int y = 0; y < p.y_levels; ++y) pdfs.push_back(pdf_at(p, y));

    const int L = p.y_levels;
    const std::size_t ic = grid.i_count();
    sig_row_a.resize(2 * L);
    sig_row_b.resize(2 * L);
    sig_mass_a.resize(2 * L);
    sig_mass_b.resize(2 * L);
    for (int d_idx = 0; d_idx < 2; ++d_idx) {
      const int dir = d_idx == 0 ? -1 : +1;
      for (int y = 0; y < L; ++y) {
        const auto target = [&](int step) {
          int ny = y + step;
          int ndir = step;
          if (ny < 0 || ny >= L) {
            ndir = -step;
            ny = y + ndir;
          }
          const int nd_idx = ndir > 0 ? 1 : 0;
          return (static_cast<std::size_t>(nd_idx) * L + ny) * ic;
        };
        const std::size_t row = d_idx * L + y;
        sig_row_a[row] = target(dir);
        sig_mass_a[row] = p.gamma1;
        sig_row_b[row] = target(-dir);
        sig_mass_b[row] = p.gamma2;
      }
    }
  }

  void build_price_tables(int g) {
    price_grid = g;
    grid_u.resize(g);
    for (int k = 0; k < g; ++k)
      grid_u[k] = p.t_min + (p.t_max - p.t_min) * k / (g - 1.0);
    surv.assign(static_cast<std::size_t>(p.y_levels) * g, 0.0);
    util.assign(static_cast<std::size_t>(p.y_levels) * g, 0.0);
    for (int y = 0; y < p.y_levels; ++y)
      for (int k = 0; k < g; ++k) {
        surv[static_cast<std::size_t>(y) * g + k] = pdfs[y].survival(grid_u[k]);
        util[static_cast<std::size_t>(y) * g + k] =
            pdfs[y].utility_integral(grid_u[k], p.b);
      }
  }
};

// One synchronous sweep; jnew and upol are written per state from jold only.
template <bool kCvi>
void sweep(const SweepCtx& c, const std::vector<double>& jold,
           std::vector<double>& jnew, std::vector<double>& upol) {
  const ModelParams& p = c.p;
  const std::size_t ic = c.grid.i_count();
  const int L = p.y_levels;
  const double gamma = p.gamma1 + p.gamma2;
  const double range = p.t_max - p.t_min;

  parallel_for(c.grid.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const std::size_t row = idx / ic;
      const std::size_t ii = idx % ic;
      const int i = p.n1 + static_cast<int>(ii);
      const int y = static_cast<int>(row % L);
      const auto& pdf = c.pdfs[y];

      const double err = p.tracking_error(i, y);
      const double pen = p.kappa * p.dt * err * err;
      const double dprob = i > p.n1 ? i * p.mu_dt : 0.0;

      double ev_base = c.sig_mass_a[row] * jold[c.sig_row_a[row] + ii] +
                       c.sig_mass_b[row] * jold[c.sig_row_b[row] + ii] +
                       (1.0 - dprob - gamma) * jold[idx];
      if (i > p.n1) ev_base += dprob * jold[idx - 1];

      double val, u;
      if (i < p.n2) {
        const double dj = jold[idx + 1] - jold[idx];
        const double w = (p.n - i) * p.lambda_dt;
        if constexpr (kCvi) {
          const double* sv = &c.surv[static_cast<std::size_t>(y) *
                                     c.price_grid];
          const double* ut = &c.util[static_cast<std::size_t>(y) *
                                     c.price_grid];
          int best_k = 0;
          double best_q = -ut[0] + p.alpha * sv[0] * dj;
          for (int k = 1; k < c.price_grid; ++k) {
            const double q = -ut[k] + p.alpha * sv[k] * dj;
            if (q < best_q) {
              best_q = q;
              best_k = k;
            }
          }
          val = pen + p.alpha * ev_base + w * best_q;
          u = c.grid_u[best_k];
        } else {
          u = optimal_price_threshold(p, dj);
          const double sv = pdf.survival(u);
          const double ut = pdf.utility_integral(u, p.b);
          val = pen - w * ut + p.alpha * (ev_base + w * sv * dj);
        }
      } else {
        // arrivals suppressed: the backup is threshold-free; record the
        // one-sided closed form (snapped onto the grid for cvi) so the
        // staircase stays coherent at the top row
        val = pen + p.alpha * ev_base;
        const double one_sided = jold[idx] - jold[idx - 1];
        u = optimal_price_threshold(p, one_sided);
        if constexpr (kCvi) {
          const double step = range / (c.price_grid - 1);
          const int k = static_cast<int>(std::lround((u - p.t_min) / step));
          u = c.grid_u[std::clamp(k, 0, c.price_grid - 1)];
        }
      }
      jnew[idx] = val;
      upol[idx] = u;
    }
  });
}

SolveReport solve_impl(const ModelParams& p, const SolveOptions& opt,
                       bool use_cvi) {
  if (opt.tol <= 0.0) throw std::invalid_argument("solve: tol > 0 required");
  if (opt.max_iter < 1)
    throw std::invalid_argument("solve: max_iter >= 1 required");
  if (use_cvi && opt.price_grid < 2)
    throw std::invalid_argument("solve: price_grid >= 2 required");

  const auto t0 = std::chrono::steady_clock::now();
  SweepCtx ctx(p);
  if (use_cvi) ctx.build_price_tables(opt.price_grid);

  const std::size_t size = ctx.grid.size();
  std::vector<double> jold(size, 0.0), jnew(size, 0.0);
  std::vector<double> upol(size, p.t_min);

  SolveReport rep;
  rep.history.reserve(256);
  for (int it = 1; it <= opt.max_iter; ++it) {
    if (use_cvi)
      sweep<true>(ctx, jold, jnew, upol);
    else
      sweep<false>(ctx, jold, jnew, upol);
    double change = 0.0;
    for (std::size_t idx = 0; idx < size; ++idx)
      change = std::max(change, std::fabs(jnew[idx] - jold[idx]));
    jold.swap(jnew);
    rep.history.push_back(change);
    rep.iterations = it;
    if (change < opt.tol) {
      rep.converged = true;
      break;
    }
  }
  rep.final_change = rep.history.back();
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  TableMeta meta;
  meta.solver = use_cvi ? "cvi" : "avi";
  meta.params_hash = params_hash(p);
  meta.iterations = rep.iterations;
  meta.tol = opt.tol;
  meta.final_change = rep.final_change;
  meta.converged = rep.converged;
  meta.wall_seconds = rep.wall_seconds;
  meta.price_grid = use_cvi ? opt.price_grid : 0;

  rep.value = ValueTable{ctx.grid, std::move(jold), meta};
  rep.policy = PolicyTable{ctx.grid, std::move(upol), meta};
  return rep;
}

}  // namespace

SolveReport cvi_solve(const ModelParams& p, const SolveOptions& opt) {
  return solve_impl(p, opt, true);
}

SolveReport avi_solve(const ModelParams& p, const SolveOptions& opt) {
  return solve_impl(p, opt, false);
}

}  // namespace regdp
