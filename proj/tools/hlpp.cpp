// command-line driver: sample | verify | distributions.
//
// Exit codes: 0 pass, 1 usage or malformed input, 2 guard violation
// (enumeration too large, contour hypothesis failed, I/O error), 3 a
// verification ran to completion and missed its tolerance.

#include <algorithm>
#include <climits>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hlpp/analysis.hpp"
#include "hlpp/distributions.hpp"
#include "hlpp/io.hpp"
#include "hlpp/kernels.hpp"
#include "hlpp/measure.hpp"
#include "hlpp/sampler.hpp"
#include "hlpp/specfun.hpp"

namespace {

using namespace hlpp;
using cd = std::complex<double>;

std::string num(double v) {
  char b[40];
  std::snprintf(b, sizeof b, "%.17g", v);
  return b;
}

std::string lab(double v) {
  std::ostringstream ss;
  ss << v;
  return ss.str();
}

std::string basename_of(const std::string& path) {
  size_t p = path.find_last_of('/');
  return p == std::string::npos ? path : path.substr(p + 1);
}

std::vector<double> geometric_alphabet(double a, double r, int n) {
  std::vector<double> x(n);
  double v = a;
  for (int i = 0; i < n; ++i, v *= r) x[i] = v;
  return x;
}

// slice index floor(tau N) with a nudge so tau N that is an integer up to
// rounding of N = 1/(1-r) lands on that integer
long long slice_of(double tau, double bigN) { return (long long)std::floor(tau * bigN + 1e-9); }

void write_manifest(const std::string& stem, const std::string& command,
                    const nlohmann::json& parameters, uint64_t seed,
                    const std::vector<std::string>& outputs) {
  nlohmann::json j;
  j["command"] = command;
  j["created_utc"] = iso8601_utc_now();
  j["parameters"] = parameters;
  j["seed"] = seed;
  auto arr = nlohmann::json::array();
  for (const std::string& p : outputs)
    arr.push_back({{"path", p}, {"git_blob_sha1", git_blob_hash(read_file(p))}});
  j["outputs"] = arr;
  write_file(stem + ".manifest.json", j.dump(2) + "\n");
}

// trailing record pointing back at the manifest, padded to the data width
// so the file stays rectangular
void csv_footer(std::ostream& os, const std::string& manifest_name, size_t width) {
  std::vector<std::string> rec(std::max<size_t>(width, 1));
  rec[0] = "# manifest: " + manifest_name;
  csv_row(os, rec);
}

// ---------------------------------------------------------------------- sample

struct SampleArgs {
  int n = 8;
  double r = 0.5, t = 0.0;
  unsigned long long steps = 0;
  uint64_t seed = 0;
  int chains = 1;
  std::string out = "run";
  std::string format = "csv";
  std::string resume, checkpoint;
  unsigned long long checkpoint_every = 0, observe_every = 0;
  std::vector<double> observe;
};

int cmd_sample(const SampleArgs& a, bool have_core) {
  std::vector<Checkpoint> starts;
  if (!a.resume.empty()) {
    if (a.chains != 1) {
      std::cerr << "error: --resume restores a single chain; drop --chains\n";
      return 1;
    }
    starts.push_back(Checkpoint::from_json(read_file(a.resume)));
  } else {
    if (!have_core) {
      std::cerr << "error: need --n --r --t --seed, or --resume\n";
      return 1;
    }
    GlauberParams p;
    p.n = a.n;
    p.r = a.r;
    p.t = a.t;
    p.seed = a.seed;
    p.validate();
    for (int c = 0; c < a.chains; ++c) {
      Checkpoint c0;
      c0.params = p;
      c0.params.stream = static_cast<uint64_t>(c);
      c0.heights.assign(static_cast<size_t>(p.n) * p.n, 0);
      starts.push_back(std::move(c0));
    }
  }

  const GlauberParams base = starts[0].params;
  const double bigN = 1.0 / (1.0 - base.r);
  std::vector<long long> slices;
  for (double tau : a.observe) slices.push_back(slice_of(tau, bigN));
  const unsigned long long stride =
      a.observe_every ? a.observe_every : std::max<unsigned long long>(1, a.steps / 1000);
  const std::string manifest_name = basename_of(a.out) + ".manifest.json";
  const int k = static_cast<int>(starts.size());

  struct ChainOut {
    std::string rows;
    std::vector<std::string> files;
    std::exception_ptr err;
  };
  std::vector<ChainOut> outs(k);

  auto heights_path = [&](int ci) {
    std::string stem = a.out;
    if (k > 1) stem += ".chain" + std::to_string(ci);
    return stem + "." + a.format;
  };
  auto checkpoint_path = [&](int ci) -> std::string {
    if (a.checkpoint.empty()) return {};
    return ci == 0 ? a.checkpoint : a.checkpoint + ".chain" + std::to_string(ci);
  };

  auto worker = [&](int ci) {
    try {
      GlauberChain chain = starts[ci].restore();
      std::ostringstream rows;
      auto emit = [&](unsigned long long it) {
        std::vector<std::string> rec{std::to_string(it), std::to_string(chain.volume())};
        for (long long s : slices)
          rec.push_back(std::to_string(
              diagonal_slice(chain.heights(), static_cast<int>(s)).length()));
        csv_row(rows, rec);
      };
      unsigned long long last_emit = chain.iter();
      emit(last_emit);
      unsigned long long next_obs = (chain.iter() / stride + 1) * stride;
      const std::string ckpath = checkpoint_path(ci);
      unsigned long long next_ck =
          (!ckpath.empty() && a.checkpoint_every)
              ? (chain.iter() / a.checkpoint_every + 1) * a.checkpoint_every
              : ULLONG_MAX;
      GlauberChain::BlockHooks hooks;
      hooks.after_move = [&](unsigned long long it, bool) {
        if (it >= next_obs) {
          emit(it);
          last_emit = it;
          next_obs = (it / stride + 1) * stride;
        }
        if (it >= next_ck) {
          write_file(ckpath, Checkpoint::of(chain).to_json(manifest_name) + "\n");
          next_ck = (it / a.checkpoint_every + 1) * a.checkpoint_every;
        }
      };
      chain.run(a.steps, hooks);
      if (chain.iter() != last_emit) emit(chain.iter());
      if (!ckpath.empty()) {
        write_file(ckpath, Checkpoint::of(chain).to_json(manifest_name) + "\n");
        outs[ci].files.push_back(ckpath);
      }

      const std::string hpath = heights_path(ci);
      if (a.format == "json") {
        write_file(hpath, Checkpoint::of(chain).to_json(manifest_name) + "\n");
      } else if (a.format == "pgm") {
        std::ostringstream ss;
        write_pgm(ss, chain.heights(), base.n, {"manifest: " + manifest_name});
        write_file(hpath, ss.str());
      } else {
        std::ostringstream ss;
        const PlanePartition& pp = chain.heights();
        for (int i = 1; i <= pp.rows; ++i) {
          std::vector<std::string> rec(pp.cols);
          for (int j = 1; j <= pp.cols; ++j) rec[j - 1] = std::to_string(pp.at(i, j));
          csv_row(ss, rec);
        }
        csv_footer(ss, manifest_name, pp.cols);
        write_file(hpath, ss.str());
      }
      outs[ci].files.push_back(hpath);
      outs[ci].rows = rows.str();
    } catch (...) {
      outs[ci].err = std::current_exception();
    }
  };

  const int cap = std::max(1, std::min(thread_cap(), k));
  for (int at = 0; at < k; at += cap) {
    std::vector<std::thread> ts;
    for (int j = at; j < std::min(k, at + cap); ++j) ts.emplace_back(worker, j);
    for (auto& th : ts) th.join();
  }
  for (const ChainOut& o : outs)
    if (o.err) std::rethrow_exception(o.err);

  std::ostringstream obs;
  std::vector<std::string> header{"iter", "volume"};
  for (double tau : a.observe) header.push_back("lambda1_tau_" + lab(tau));
  csv_row(obs, header);
  for (const ChainOut& o : outs) obs << o.rows;
  csv_footer(obs, manifest_name, header.size());
  const std::string obs_path = a.out + ".observables.csv";
  write_file(obs_path, obs.str());

  std::vector<std::string> outputs;
  for (const ChainOut& o : outs)
    outputs.insert(outputs.end(), o.files.begin(), o.files.end());
  outputs.push_back(obs_path);

  nlohmann::json params = {{"n", base.n},
                           {"r", base.r},
                           {"t", base.t},
                           {"steps", a.steps},
                           {"seed", base.seed},
                           {"chains", a.chains},
                           {"format", a.format},
                           {"observe", a.observe},
                           {"observe_every", stride},
                           {"checkpoint", a.checkpoint},
                           {"checkpoint_every", a.checkpoint_every},
                           {"resume", a.resume},
                           {"out", a.out}};
  write_manifest(a.out, "sample", params, base.seed, outputs);
  std::printf("sample n=%d r=%.17g t=%.17g steps=%llu chains=%d out=%s\n", base.n, base.r,
              base.t, a.steps, a.chains, a.out.c_str());
  return 0;
}

// ---------------------------------------------------------------------- verify

int report(const char* check, const std::string& detail, double residual, double tol) {
  bool ok = residual < tol;
  std::printf("check=%s %s residual=%.3e tol=%.1e status=%s\n", check, detail.c_str(),
              residual, tol, ok ? "pass" : "fail");
  return ok ? 0 : 3;
}

int verify_zn(int n, double r, double t, int hmax, double tol) {
  HLParams p{r, t};
  p.validate();
  if (box_count(n, n, hmax) > 5e6)
    throw std::runtime_error("enumeration guard: box " + std::to_string(n) + "^2 x " +
                             std::to_string(hmax) + " exceeds 5e6 states");
  double sum = 0, sum_below = 0, sum0 = 0;
  enumerate_box(n, n, hmax, [&](const PlanePartition& pp) {
    double w = hl_weight(pp, p);
    sum += w;
    if (pp.at(1, 1) < hmax) sum_below += w;
    sum0 += std::pow(r, static_cast<double>(pp.volume()));
  });
  double z = partition_function_box(n, p);
  double tail_bound = partition_function_box(n, {r, 0.0}) - sum0;
  // the mass at max entry exactly hmax decays geometrically with ratio r per
  // extra level, so the truncated tail resums in closed form
  double estimate = sum + (sum - sum_below) * r / (1.0 - r);
  double raw = std::abs(sum - z);
  double residual = std::abs(estimate - z);
  bool bounded = raw <= tail_bound * (1 + 1e-12) + 1e-15;
  std::ostringstream d;
  d << "n=" << n << " r=" << r << " t=" << t << " hmax=" << hmax << " product=" << num(z)
    << " enumerated=" << num(sum) << " raw=" << num(raw) << " tail_bound=" << num(tail_bound)
    << " tail_ok=" << (bounded ? "yes" : "no");
  int rc = report("zn", d.str(), residual, tol);
  return bounded ? rc : 3;
}

int verify_apibpi(int base, int hmax, const std::vector<double>& ts, double tol) {
  if (box_count(base, base, hmax) > 5e6)
    throw std::runtime_error("enumeration guard: base " + std::to_string(base) + " hmax " +
                             std::to_string(hmax) + " exceeds 5e6 states");
  double worst = 0;
  long long count = 0;
  enumerate_box(base, base, hmax, [&](const PlanePartition& pp) {
    ++count;
    for (double t : ts)
      worst = std::max(worst, std::abs(border_polynomial(pp, t) - slice_polynomial(pp, t)));
  });
  std::ostringstream d;
  d << "base=" << base << " hmax=" << hmax << " states=" << count << " tvals=" << ts.size();
  return report("apibpi", d.str(), worst, tol);
}

cd laplace_expectation(const SliceMeasure& m, cd u) {
  return exact_expectation(m, [&](const Partition& la) {
    return 1.0 / q_pochhammer((1.0 - m.t) * u * std::pow(m.t, -double(la.length())), m.t);
  });
}

int verify_laplace(int N, double a, double r, double t, cd u, int nodes, double y, double tol) {
  if (N > 4) throw std::runtime_error("oracle guard: expectation sum needs N <= 4");
  SliceMeasure m{N, a, r, t};
  m.validate();
  auto x = geometric_alphabet(a, r, N);
  LineKernelOptions lo;
  lo.half_length = y;
  cd det = fredholm_det(finite_kernel(x, x, t, u, lo), finite_kernel_contour(t, nodes));
  cd want = laplace_expectation(m, u);
  std::ostringstream d;
  d << "n=" << N << " a=" << a << " r=" << r << " t=" << t << " u=" << u.real() << "+"
    << u.imag() << "i nodes=" << nodes << " det=" << num(det.real()) << "+"
    << num(det.imag()) << "i expectation=" << num(want.real()) << "+" << num(want.imag())
    << "i";
  return report("laplace", d.str(), std::abs(det - want), tol);
}

int verify_moment(int N, double a, double r, double t, int k, int nodes, double tol) {
  if (N > 4) throw std::runtime_error("oracle guard: expectation sum needs N <= 4");
  SliceMeasure m{N, a, r, t};
  m.validate();
  auto x = geometric_alphabet(a, r, N);
  double got = moment_contour(k, x, x, t, nodes);
  cd want = exact_expectation(
      m, [&](const Partition& la) { return std::pow(t, -double(k) * la.length()); });
  std::ostringstream d;
  d << "n=" << N << " a=" << a << " r=" << r << " t=" << t << " k=" << k
    << " contour=" << num(got) << " expectation=" << num(want.real());
  return report("moment", d.str(), std::abs(got - want.real()), tol);
}

// gaussian elimination with partial pivoting for the stationary vector
std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b, int n) {
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int i = c + 1; i < n; ++i)
      if (std::abs(a[size_t(i) * n + c]) > std::abs(a[size_t(piv) * n + c])) piv = i;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(a[size_t(c) * n + j], a[size_t(piv) * n + j]);
      std::swap(b[c], b[piv]);
    }
    double d = a[size_t(c) * n + c];
    if (d == 0.0) throw std::runtime_error("singular transition system");
    for (int i = c + 1; i < n; ++i) {
      double f = a[size_t(i) * n + c] / d;
      if (f == 0.0) continue;
      for (int j = c; j < n; ++j) a[size_t(i) * n + j] -= f * a[size_t(c) * n + j];
      b[i] -= f * b[c];
    }
  }
  std::vector<double> x(n);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < n; ++j) s -= a[size_t(i) * n + j] * x[j];
    x[i] = s / a[size_t(i) * n + i];
  }
  return x;
}

int verify_stationarity(int n, double r, double t, double db_tol, double stat_tol) {
  std::vector<std::vector<int>> states;
  std::map<std::vector<int>, int> index;
  enumerate_box(n, n, n, [&](const PlanePartition& pp) {
    index.emplace(pp.h, static_cast<int>(states.size()));
    states.push_back(pp.h);
  });
  const int S = static_cast<int>(states.size());
  if (S > 1200)
    throw std::runtime_error("state-space guard: " + std::to_string(S) + " states > 1200");

  HLParams p{r, t};
  p.validate();
  std::vector<double> pi(S);
  double z = 0;
  for (int i = 0; i < S; ++i) {
    PlanePartition pp(n, n);
    pp.h = states[i];
    pi[i] = hl_weight(pp, p);
    z += pi[i];
  }
  for (double& v : pi) v /= z;

  // one elementary iteration of the chain, assembled from the sampler's own
  // conditional probabilities rather than from measure ratios
  GlauberParams gp;
  gp.n = n;
  gp.r = r;
  gp.t = t;
  GlauberChain chain(gp);
  const double n3 = static_cast<double>(n) * n * n;
  std::vector<double> P(static_cast<size_t>(S) * S, 0.0);
  for (int i = 0; i < S; ++i) {
    PlanePartition pp(n, n);
    pp.h = states[i];
    chain.restore(pp, 0, 0);
    double stay = 1.0;
    for (int k = 0; k < chain.addable_count(); ++k) {
      auto [x, y] = chain.addable_at(k);
      double pr = chain.flip_probability(x, y, true) / n3;
      PlanePartition nxt = pp;
      nxt.set(x, y, pp.at(x, y) + 1);
      P[static_cast<size_t>(i) * S + index.at(nxt.h)] += pr;
      stay -= pr;
    }
    for (int k = 0; k < chain.removable_count(); ++k) {
      auto [x, y] = chain.removable_at(k);
      double pr = (1.0 - chain.flip_probability(x, y, false)) / n3;
      PlanePartition nxt = pp;
      nxt.set(x, y, pp.at(x, y) - 1);
      P[static_cast<size_t>(i) * S + index.at(nxt.h)] += pr;
      stay -= pr;
    }
    P[static_cast<size_t>(i) * S + i] += stay;
  }

  double db = 0;
  for (int i = 0; i < S; ++i)
    for (int j = i + 1; j < S; ++j)
      db = std::max(db, std::abs(pi[i] * P[size_t(i) * S + j] - pi[j] * P[size_t(j) * S + i]));

  // stationary vector: x^T P = x^T with sum 1; last equation replaced by the
  // normalization
  std::vector<double> A(static_cast<size_t>(S) * S), b(S, 0.0);
  for (int i = 0; i < S; ++i)
    for (int j = 0; j < S; ++j)
      A[size_t(i) * S + j] = P[size_t(j) * S + i] - (i == j ? 1.0 : 0.0);
  for (int j = 0; j < S; ++j) A[size_t(S - 1) * S + j] = 1.0;
  b[S - 1] = 1.0;
  std::vector<double> x = solve_dense(std::move(A), std::move(b), S);
  double stat = 0;
  for (int i = 0; i < S; ++i) stat = std::max(stat, std::abs(x[i] - pi[i]));

  bool ok = db < db_tol && stat < stat_tol;
  std::printf(
      "check=stationarity n=%d r=%.17g t=%.17g states=%d detailed_balance=%.3e db_tol=%.1e "
      "stationary=%.3e stat_tol=%.1e status=%s\n",
      n, r, t, S, db, db_tol, stat, stat_tol, ok ? "pass" : "fail");
  return ok ? 0 : 3;
}

int verify_descent(double a, double r, double A, int grid) {
  DescentReport rep = descent_check(a, r, A, grid);
  bool ok = rep.violations == 0;
  std::printf("check=descent a=%.17g r=%.17g A=%.17g grid=%d violations=%d worst=%.3e "
              "worst_y=%.6f status=%s\n",
              a, r, A, grid, rep.violations, rep.worst, rep.worst_y, ok ? "pass" : "fail");
  return ok ? 0 : 3;
}

// --------------------------------------------------------------- distributions

struct DistArgs {
  std::string what;
  double xmin = -6, xmax = 4, dx = 0.25;
  double bigT = 10;
  int order = 64;
  std::string out = "dist";
  std::string compare;
  std::vector<double> quantiles = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
};

double invert_cdf(const std::function<double(double)>& cdf, double p) {
  double lo = -40, hi = 40;
  for (int i = 0; i < 80 && hi - lo > 1e-11; ++i) {
    double mid = 0.5 * (lo + hi);
    (cdf(mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double sample_quantile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0;
  double h = q * (static_cast<double>(sorted.size()) - 1);
  size_t lo = static_cast<size_t>(std::floor(h));
  size_t hi = std::min(lo + 1, sorted.size() - 1);
  double f = h - static_cast<double>(lo);
  return (1 - f) * sorted[lo] + f * sorted[hi];
}

int cmd_distributions(const DistArgs& a) {
  const bool gue = a.what == "gue";
  std::function<double(double)> cdf;
  if (gue)
    cdf = [&](double x) { return f_gue(x, a.order); };
  else
    cdf = [&](double x) { return f_cdrp(x, a.bigT, a.order); };

  if (!a.compare.empty()) {
    std::vector<double> samples = csv_samples(read_file(a.compare));
    if (samples.empty()) throw CsvError(1, "no samples in " + a.compare);
    double ks = ks_distance(samples, cdf);
    std::sort(samples.begin(), samples.end());
    for (double q : a.quantiles) {
      double want = invert_cdf(cdf, q);
      double got = sample_quantile(samples, q);
      std::printf("quantile=%g predicted=%.6f empirical=%.6f diff=%+.6f\n", q, want, got,
                  got - want);
    }
    std::printf("ks=%.6f n=%zu what=%s\n", ks, samples.size(), a.what.c_str());
    return 0;
  }

  if (!(a.dx > 0) || a.xmax < a.xmin) {
    std::cerr << "error: need dx > 0 and xmax >= xmin\n";
    return 1;
  }
  const std::string manifest_name = basename_of(a.out) + ".manifest.json";
  std::ostringstream table;
  csv_row(table, {"x", "value"});
  long long m = llround((a.xmax - a.xmin) / a.dx);
  for (long long i = 0; i <= m; ++i) {
    double x = a.xmin + static_cast<double>(i) * a.dx;
    csv_row(table, {num(x), num(cdf(x))});
  }
  csv_footer(table, manifest_name, 2);
  const std::string path = a.out + ".csv";
  write_file(path, table.str());
  nlohmann::json params = {{"what", a.what}, {"xmin", a.xmin}, {"xmax", a.xmax},
                           {"dx", a.dx},     {"bigT", a.bigT}, {"order", a.order},
                           {"out", a.out}};
  write_manifest(a.out, "distributions", params, 0, {path});
  std::printf("distributions what=%s points=%lld out=%s\n", a.what.c_str(), m + 1,
              path.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hall-Littlewood plane partitions: sampling, exact cross-checks, and "
               "limit distributions"};
  app.require_subcommand(1);

  SampleArgs sa;
  CLI::App* sample = app.add_subcommand("sample", "run the Glauber chain; write final "
                                                  "heights, observables, and a manifest");
  auto* o_n = sample->add_option("--n", sa.n, "box side (heights capped at n)");
  auto* o_r = sample->add_option("--r", sa.r, "volume rate, 0 < r < 1");
  auto* o_t = sample->add_option("--t", sa.t, "Hall-Littlewood parameter, 0 <= t < 1");
  sample->add_option("--steps", sa.steps, "iteration target (elementary slot updates)")
      ->required();
  auto* o_seed = sample->add_option("--seed", sa.seed, "rng seed");
  sample->add_option("--chains", sa.chains, "independent chains on streams 0..k-1")
      ->check(CLI::Range(1, 4096));
  sample->add_option("--out", sa.out, "output stem");
  sample->add_option("--format", sa.format, "final heights format")
      ->check(CLI::IsMember({"csv", "json", "pgm"}));
  auto* o_res = sample->add_option("--resume", sa.resume, "checkpoint to continue from");
  sample->add_option("--checkpoint", sa.checkpoint, "checkpoint path (written at the end, "
                                                    "and periodically with "
                                                    "--checkpoint-every)");
  sample->add_option("--checkpoint-every", sa.checkpoint_every,
                     "checkpoint cadence in iterations");
  sample->add_option("--observe", sa.observe,
                     "comma-separated tau list; records lambda'_1 at slice floor(tau/(1-r))")
      ->delimiter(',');
  sample->add_option("--observe-every", sa.observe_every,
                     "observable cadence in iterations (default: steps/1000)");
  o_res->excludes(o_n)->excludes(o_r)->excludes(o_t)->excludes(o_seed);

  CLI::App* verify = app.add_subcommand("verify", "cross-checks with machine-readable "
                                                  "pass/fail lines");
  verify->require_subcommand(1);

  struct {
    int n = 2, hmax = 8;
    double r = 0.3, t = 0.4, tol = 1e-8;
  } zn;
  CLI::App* v_zn = verify->add_subcommand("zn", "box partition function: enumeration vs "
                                                "product");
  v_zn->add_option("--n", zn.n);
  v_zn->add_option("--r", zn.r);
  v_zn->add_option("--t", zn.t);
  v_zn->add_option("--hmax", zn.hmax);
  v_zn->add_option("--tol", zn.tol);

  struct {
    int base = 3, hmax = 3;
    std::vector<double> t = {0.3, 0.7};
    double tol = 1e-12;
  } ab;
  CLI::App* v_ab = verify->add_subcommand("apibpi", "border polynomial vs slice product");
  v_ab->add_option("--base", ab.base);
  v_ab->add_option("--hmax", ab.hmax);
  v_ab->add_option("--t", ab.t)->delimiter(',');
  v_ab->add_option("--tol", ab.tol);

  struct {
    int n = 2, nodes = 128;
    double a = 0.3, r = 0.5, t = 0.5, u = -0.1, uim = 0.0, y = 40, tol = 1e-6;
  } lp;
  CLI::App* v_lp = verify->add_subcommand("laplace", "circle-kernel determinant vs exact "
                                                     "Pochhammer expectation");
  v_lp->add_option("--n", lp.n);
  v_lp->add_option("--a", lp.a);
  v_lp->add_option("--r", lp.r);
  v_lp->add_option("--t", lp.t);
  v_lp->add_option("--u", lp.u);
  v_lp->add_option("--uim", lp.uim);
  v_lp->add_option("--nodes", lp.nodes);
  v_lp->add_option("--y", lp.y);
  v_lp->add_option("--tol", lp.tol);

  struct {
    int n = 2, k = 1, nodes = 512;
    double a = 0.3, r = 0.5, t = 0.5, tol = 1e-6;
  } mo;
  CLI::App* v_mo = verify->add_subcommand("moment", "nested-contour moment vs exact "
                                                    "expectation");
  v_mo->add_option("--n", mo.n);
  v_mo->add_option("--a", mo.a);
  v_mo->add_option("--r", mo.r);
  v_mo->add_option("--t", mo.t);
  v_mo->add_option("--k", mo.k)->check(CLI::Range(1, 2));
  v_mo->add_option("--nodes", mo.nodes);
  v_mo->add_option("--tol", mo.tol);

  struct {
    int n = 2;
    double r = 0.3, t = 0.4, db_tol = 1e-12, stat_tol = 1e-10;
  } st;
  CLI::App* v_st = verify->add_subcommand("stationarity", "transition matrix from the "
                                                          "sampler vs measure weights");
  v_st->add_option("--n", st.n);
  v_st->add_option("--r", st.r);
  v_st->add_option("--t", st.t);
  v_st->add_option("--db-tol", st.db_tol);
  v_st->add_option("--stat-tol", st.stat_tol);

  struct {
    double a = 0.5, r = 0.9, A = 0.05;
    int grid = 200;
  } de;
  CLI::App* v_de = verify->add_subcommand("descent", "monotonicity of the action along "
                                                     "the wedge rays");
  v_de->add_option("--a", de.a);
  v_de->add_option("--r", de.r);
  v_de->add_option("--A", de.A);
  v_de->add_option("--grid", de.grid);

  DistArgs da;
  CLI::App* dist = app.add_subcommand("distributions", "limit-law tables and sample "
                                                       "comparisons");
  dist->add_option("--what", da.what, "gue or cdrp")
      ->required()
      ->check(CLI::IsMember({"gue", "cdrp"}));
  dist->add_option("--xmin", da.xmin);
  dist->add_option("--xmax", da.xmax);
  dist->add_option("--dx", da.dx);
  dist->add_option("--bigT", da.bigT, "crossover time (cdrp only)");
  dist->add_option("--order", da.order, "quadrature order of the determinant engine");
  dist->add_option("--out", da.out, "output stem (table mode)");
  dist->add_option("--compare", da.compare, "samples CSV; prints KS distance and "
                                            "per-quantile residuals");
  dist->add_option("--quantiles", da.quantiles)->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (sample->parsed()) {
      bool have_core = o_n->count() && o_r->count() && o_t->count() && o_seed->count();
      return cmd_sample(sa, have_core);
    }
    if (verify->parsed()) {
      if (v_zn->parsed()) return verify_zn(zn.n, zn.r, zn.t, zn.hmax, zn.tol);
      if (v_ab->parsed()) return verify_apibpi(ab.base, ab.hmax, ab.t, ab.tol);
      if (v_lp->parsed())
        return verify_laplace(lp.n, lp.a, lp.r, lp.t, {lp.u, lp.uim}, lp.nodes, lp.y, lp.tol);
      if (v_mo->parsed()) return verify_moment(mo.n, mo.a, mo.r, mo.t, mo.k, mo.nodes, mo.tol);
      if (v_st->parsed()) return verify_stationarity(st.n, st.r, st.t, st.db_tol, st.stat_tol);
      if (v_de->parsed()) return verify_descent(de.a, de.r, de.A, de.grid);
    }
    if (dist->parsed()) return cmd_distributions(da);
  } catch (const CsvError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
