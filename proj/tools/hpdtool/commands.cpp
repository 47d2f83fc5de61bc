#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

#include "hpd/errors.hpp"
#include "hpd/io.hpp"

namespace hpdtool {

namespace {

using nlohmann::json;
namespace io = hpd::io;

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw hpd::InputError(what + ": '" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw hpd::InputError(what + " is empty");
  return out;
}

Eigen::Index column_of(const std::vector<std::string>& labels, const std::string& label) {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw hpd::InputError("unknown vertex label '" + label + "'");
  return static_cast<Eigen::Index>(it - labels.begin());
}

// "e:s1,s1:s2" -> column index pairs.
std::vector<std::pair<Eigen::Index, Eigen::Index>> parse_pairs(const std::string& text,
                                                               const std::vector<std::string>& labels) {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw hpd::InputError("pairs are written a:b, got '" + item + "'");
    out.emplace_back(column_of(labels, item.substr(0, colon)), column_of(labels, item.substr(colon + 1)));
  }
  return out;
}

std::vector<std::pair<Eigen::Index, Eigen::Index>> default_pairs(Eigen::Index columns) {
  const Eigen::Index m = std::min<Eigen::Index>(columns, 7);
  std::vector<std::pair<Eigen::Index, Eigen::Index>> out;
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = i; j < m; ++j) out.emplace_back(i, j);
  return out;
}

hpd::Reduction parse_reduction(const std::string& s) {
  if (s == "full-tree") return hpd::Reduction::full_tree;
  if (s == "symmetric") return hpd::Reduction::symmetric;
  return hpd::Reduction::automatic;
}

json stats_json(const std::vector<hpd::CovEstimate>& estimates, const std::vector<std::string>& names,
                const std::vector<double>& theory, bool& all_pass) {
  json out = json::array();
  for (std::size_t k = 0; k < estimates.size(); ++k) {
    const auto& e = estimates[k];
    const bool pass = std::abs(e.covariance - theory[k]) <= e.half_width;
    all_pass = all_pass && pass;
    json row = io::to_json(e);
    row["pair"] = {names[static_cast<std::size_t>(e.i)], names[static_cast<std::size_t>(e.j)]};
    row["theory"] = io::number(theory[k]);
    row["pass"] = pass;
    out.push_back(row);
  }
  return out;
}

// Cov(Theta_n, Theta_{n+k}) for n + k <= depth against `theory(k)`.
template <class Theory>
json theta_stats(const Eigen::MatrixXd& theta, Theory&& theory, bool& all_pass) {
  const auto levels = theta.cols();
  std::vector<std::pair<Eigen::Index, Eigen::Index>> pairs;
  std::vector<double> expected;
  std::vector<std::string> names;
  for (Eigen::Index n = 0; n < levels; ++n) names.push_back("theta" + std::to_string(n));
  for (Eigen::Index n = 0; n < levels; ++n) {
    for (Eigen::Index k = 0; n + k < levels; ++k) {
      pairs.emplace_back(n, n + k);
      expected.push_back(theory(static_cast<int>(k)));
    }
  }
  return stats_json(hpd::empirical_cov(theta, pairs), names, expected, all_pass);
}

// Option storage owned by the callback that reads it.
template <class State>
std::shared_ptr<State> state() {
  return std::make_shared<State>();
}

void tree_commands(CLI::App& app, const Globals& /*globals*/, Outcome& outcome) {
  auto* tree = app.add_subcommand("tree", "Rooted-tree utilities");
  tree->require_subcommand(1);

  struct Truncate {
    int q = 2;
    int depth = 0;
  };
  auto t = state<Truncate>();
  auto* trunc = tree->add_subcommand("truncate", "Breadth-first vertex list of T_q up to a depth");
  trunc->add_option("--q", t->q, "Arity")->required()->check(CLI::Range(2, 1'000'000));
  trunc->add_option("--depth", t->depth, "Depth")->required()->check(CLI::NonNegativeNumber);
  trunc->callback([t, &outcome] {
    const auto tr = hpd::truncate(t->q, t->depth);
    outcome.command = "tree truncate";
    outcome.result = {{"q", t->q}, {"depth", t->depth}, {"size", tr.size()}, {"labels", tr.labels()}};
  });

  struct Rel {
    std::string a, b;
  };
  auto r = state<Rel>();
  auto* rel = tree->add_subcommand("relation", "Comparability and distance of two words");
  rel->add_option("--a", r->a, "First vertex, e.g. s1s2")->required();
  rel->add_option("--b", r->b, "Second vertex")->required();
  rel->callback([r, &outcome] {
    const auto res = hpd::relation(hpd::Vertex::parse(r->a), hpd::Vertex::parse(r->b));
    outcome.command = "tree relation";
    outcome.result = {{"comparable", res.comparable}};
    if (res.comparable) {
      outcome.result["distance"] = res.distance;
      outcome.result["ancestor"] = res.ancestor == hpd::Ancestor::first ? "a" : "b";
    }
  });

  struct Delta {
    std::string tree;
    int n = 1;
  };
  auto d = state<Delta>();
  auto* delta = tree->add_subcommand("delta", "Maximal descendant count at distance n");
  delta->add_option("--tree", d->tree, "Tree JSON (path or inline)")->required();
  delta->add_option("--n", d->n, "Distance")->required()->check(CLI::PositiveNumber);
  delta->callback([d, &outcome] {
    const auto g = io::parse_tree(d->tree);
    outcome.command = "tree delta";
    outcome.result = {{"n", d->n}, {"vertices", g.size()}, {"delta", hpd::delta_n(g, d->n)}};
  });

  struct Tq1 {
    int q = 2;
    int n = 1;
  };
  auto s = state<Tq1>();
  auto* tq1 = tree->add_subcommand("tq1", "Ordered vertex list of the T(q;1) window");
  tq1->add_option("--q", s->q, "Arity")->required()->check(CLI::Range(2, 1'000'000));
  tq1->add_option("--n", s->n, "Vertices per ray")->required()->check(CLI::PositiveNumber);
  tq1->callback([s, &outcome] {
    json labels = json::array();
    for (const auto& v : hpd::tq1_truncation(s->q, s->n)) labels.push_back(v.label());
    outcome.command = "tree tq1";
    outcome.result = {{"q", s->q}, {"n", s->n}, {"labels", labels}};
  });
}

void kernel_commands(CLI::App& app, const Globals& globals, Outcome& outcome) {
  auto* kernel = app.add_subcommand("kernel", "Branching-Toeplitz kernels and PSD tests");
  kernel->require_subcommand(1);

  struct Build {
    std::string alpha = "beta";
    int q = 2;
    int depth = 2;
  };
  auto b = state<Build>();
  auto* build = kernel->add_subcommand("build", "Kernel of alpha on the depth-D truncation");
  build->add_option("--alpha", b->alpha, "Sequence JSON, 'beta' or 'white'")->capture_default_str();
  build->add_option("--q", b->q, "Arity")->required()->check(CLI::Range(2, 1'000'000));
  build->add_option("--depth", b->depth, "Depth")->required()->check(CLI::NonNegativeNumber);
  build->callback([b, &globals, &outcome] {
    const auto alpha = io::parse_alpha(b->alpha, b->q, b->depth);
    const auto a = hpd::branching_toeplitz(alpha, hpd::truncate(alpha.arity(), b->depth));
    const auto psd = hpd::psd_check(a, globals.tol.value_or(hpd::kPsdTolerance));
    outcome.command = "kernel build";
    outcome.result = {{"matrix", io::to_json(a)}, {"psd", io::to_json(psd)}};
    outcome.csv = io::to_csv(a);
  });

  struct Psd {
    std::string matrix;
  };
  auto p = state<Psd>();
  auto* psd = kernel->add_subcommand("psd", "PSD test of a Hermitian matrix");
  psd->add_option("--matrix", p->matrix, "Matrix JSON (path or inline)")->required();
  psd->callback([p, &globals, &outcome] {
    const auto res = hpd::psd_check(io::parse_matrix(p->matrix), globals.tol.value_or(hpd::kPsdTolerance));
    outcome.command = "kernel psd";
    outcome.result = io::to_json(res);
    outcome.passed = res.psd;
  });

  struct Cantor {
    int q = 2;
    int depth = 2;
  };
  auto c = state<Cantor>();
  auto* cantor = kernel->add_subcommand("cantor", "Cantor-measure Gram factorization of the beta kernel");
  cantor->add_option("--q", c->q, "Arity")->required()->check(CLI::Range(2, 1'000'000));
  cantor->add_option("--depth", c->depth, "Depth")->required()->check(CLI::NonNegativeNumber);
  cantor->callback([c, &globals, &outcome] {
    const auto g = hpd::cantor_gram(c->q, c->depth);
    const auto k = hpd::branching_toeplitz(hpd::HpdSequence::beta(c->q, c->depth), hpd::truncate(c->q, c->depth));
    const double dev = (g.gram.entries() - k.entries()).cwiseAbs().maxCoeff();
    const double tol = globals.tol.value_or(1e-12);
    outcome.command = "kernel cantor";
    outcome.result = {{"q", c->q},
                      {"depth", c->depth},
                      {"leaves", g.vectors.cols()},
                      {"max_deviation", dev},
                      {"tolerance", tol},
                      {"gram", io::to_json(g.gram)}};
    outcome.passed = dev <= tol;
    outcome.csv = io::to_csv(g.gram);
  });

  struct Markov {
    std::string k1, k2, shared;
  };
  auto m = state<Markov>();
  auto* markov = kernel->add_subcommand("markov", "Markov product of two kernels along a shared label");
  markov->add_option("--k1", m->k1, "First kernel JSON")->required();
  markov->add_option("--k2", m->k2, "Second kernel JSON")->required();
  markov->add_option("--shared", m->shared, "Shared label")->required();
  markov->callback([m, &globals, &outcome] {
    const auto k = hpd::markov_product(io::parse_matrix(m->k1), io::parse_matrix(m->k2), m->shared);
    const auto psd = hpd::psd_check(k, globals.tol.value_or(hpd::kPsdTolerance));
    outcome.command = "kernel markov";
    outcome.result = {{"matrix", io::to_json(k)}, {"psd", io::to_json(psd)}};
    outcome.csv = io::to_csv(k);
  });

  struct Toeplitz {
    std::string alpha;
    int q = 2;
    int order = 1;
  };
  auto tp = state<Toeplitz>();
  auto* toeplitz = kernel->add_subcommand("toeplitz", "Classical Toeplitz matrix of q^{n/2} alpha(n)");
  toeplitz->add_option("--alpha", tp->alpha, "Sequence JSON, 'beta' or 'white'")->required();
  toeplitz->add_option("--q", tp->q, "Arity")->check(CLI::Range(2, 1'000'000));
  toeplitz->add_option("--order", tp->order, "Matrix order")->required()->check(CLI::PositiveNumber);
  toeplitz->callback([tp, &globals, &outcome] {
    const auto alpha = io::parse_alpha(tp->alpha, tp->q, tp->order - 1);
    const auto t = hpd::hpd_toeplitz(alpha, tp->order);
    outcome.command = "kernel toeplitz";
    outcome.result = {{"matrix", io::to_json(t)},
                      {"psd", io::to_json(hpd::psd_check(t, globals.tol.value_or(hpd::kPsdTolerance)))}};
    outcome.csv = io::to_csv(t);
  });

  struct Alpha {
    std::string measure, modulate;
    int q = 2;
    int n_max = 8;
  };
  auto al = state<Alpha>();
  auto* alpha = kernel->add_subcommand("alpha", "alpha(n) = q^{-n/2} nu^(n), optionally modulated");
  alpha->add_option("--measure", al->measure, "Spectral measure nu")->required();
  alpha->add_option("--q", al->q, "Arity")->required()->check(CLI::Range(2, 1'000'000));
  alpha->add_option("--n-max", al->n_max, "Last index")->check(CLI::NonNegativeNumber)->capture_default_str();
  alpha->add_option("--modulate", al->modulate, "Multiply by the coefficients of this measure");
  alpha->callback([al, &outcome] {
    auto seq = hpd::alpha_from_measure(io::parse_measure(al->measure), al->q, al->n_max);
    if (!al->modulate.empty()) seq = hpd::modulate(seq, io::parse_measure(al->modulate));
    outcome.command = "kernel alpha";
    outcome.result = io::to_json(seq);
  });
}

void hpd_commands(CLI::App& app, const Globals& globals, Outcome& outcome) {
  auto* hpd_cmd = app.add_subcommand("hpd", "q-HPD classification");
  hpd_cmd->require_subcommand(1);

  struct Check {
    std::string alpha;
    int q = 2;
    int order = 8;
    int oracle_depth = -1;
  };
  auto c = state<Check>();
  auto* check = hpd_cmd->add_subcommand("check", "Decay, Toeplitz and optional tree-kernel test");
  check->add_option("--alpha", c->alpha, "Sequence JSON, 'beta' or 'white'")->required();
  check->add_option("--q", c->q, "Arity (overridden by the JSON's q)")->check(CLI::Range(2, 1'000'000));
  check->add_option("--N", c->order, "Toeplitz order")->check(CLI::PositiveNumber)->capture_default_str();
  check->add_option("--oracle-depth", c->oracle_depth, "Cross-check on the tree kernel of this depth")
      ->check(CLI::NonNegativeNumber);
  check->callback([c, &globals, &outcome] {
    const int n_max = std::max(c->order, c->oracle_depth);
    const auto alpha = io::parse_alpha(c->alpha, c->q, n_max);
    std::optional<int> oracle;
    if (c->oracle_depth >= 0) oracle = c->oracle_depth;
    const auto report =
        hpd::hpd_check(alpha, c->order, oracle, 1e-12, globals.tol.value_or(hpd::kPsdTolerance));
    outcome.command = "hpd check";
    outcome.result = io::to_json(report);
    outcome.passed = report.consistent;
  });
}

void simulate_commands(CLI::App& app, const Globals& globals, Outcome& outcome) {
  auto* sim = app.add_subcommand("simulate", "Gaussian branching-type processes");
  sim->require_subcommand(1);

  struct Xr {
    int q = 2;
    double r = 0.5;
    int depth = 2;
    int cutoff = -1;
    std::size_t samples = 10000;
    std::string pairs;
    bool theta = false;
    bool strict = false;
  };
  auto x = state<Xr>();
  auto* xr = sim->add_subcommand("xr", "Averaging construction X^(r)");
  xr->add_option("--q", x->q, "Arity")->required()->check(CLI::Range(2, 1'000'000));
  xr->add_option("--r", x->r, "Radius in (0, 1)")->required();
  xr->add_option("--depth", x->depth, "Window depth")->required()->check(CLI::NonNegativeNumber);
  xr->add_option("--cutoff", x->cutoff, "Series cutoff K (default: omitted variance < 1e-6)")
      ->check(CLI::NonNegativeNumber);
  xr->add_option("--samples", x->samples, "Sample count")->check(CLI::PositiveNumber)->capture_default_str();
  xr->add_option("--pairs", x->pairs, "Covariance pairs, e.g. e:e,e:s1,s1:s2");
  xr->add_flag("--theta", x->theta, "Also report level-average covariances");
  xr->add_flag("--strict", x->strict, "Exit 1 when an estimate misses its 99% interval");
  xr->callback([x, &globals, &outcome] {
    hpd::SimulationConfig cfg;
    cfg.q = x->q;
    cfg.r = x->r;
    cfg.depth = x->depth;
    if (x->cutoff >= 0) cfg.tail_cutoff = x->cutoff;
    cfg.samples = x->samples;
    cfg.seed = globals.seed;
    cfg.threads = globals.threads;
    const auto batch = hpd::simulate_xr(cfg);
    const auto pairs = x->pairs.empty() ? default_pairs(batch.samples.cols()) : parse_pairs(x->pairs, batch.labels);
    const double var = 1.0 / (1.0 - x->r * x->r);
    const double sq = std::sqrt(static_cast<double>(x->q));
    std::vector<double> theory;
    for (const auto& [i, j] : pairs) {
      const auto rel = hpd::relation(hpd::Vertex::parse(batch.labels[static_cast<std::size_t>(i)]),
                                     hpd::Vertex::parse(batch.labels[static_cast<std::size_t>(j)]));
      theory.push_back(rel.comparable ? std::pow(x->r / sq, rel.distance) * var : 0.0);
    }
    bool all_pass = true;
    outcome.command = "simulate xr";
    outcome.result = {{"batch", batch.provenance},
                      {"stats", stats_json(hpd::empirical_cov(batch.samples, pairs), batch.labels, theory, all_pass)}};
    if (x->theta) {
      const auto theta = hpd::theta_average(batch, hpd::truncate(x->q, x->depth));
      outcome.result["theta"] =
          theta_stats(theta, [&](int k) { return std::pow(x->r, k) * var; }, all_pass);
    }
    outcome.result["all_within_ci99"] = all_pass;
    outcome.passed = all_pass || !x->strict;
    outcome.csv = io::to_csv(batch);
  });

  struct Kern {
    std::string alpha = "beta";
    int q = 2;
    int depth = 2;
    std::size_t samples = 10000;
    std::string pairs;
    bool theta = false;
    bool strict = false;
  };
  auto k = state<Kern>();
  auto* kern = sim->add_subcommand("kernel", "Gaussian samples with the branching-Toeplitz covariance of alpha");
  kern->add_option("--alpha", k->alpha, "Sequence JSON, 'beta' or 'white'")->capture_default_str();
  kern->add_option("--q", k->q, "Arity")->required()->check(CLI::Range(2, 1'000'000));
  kern->add_option("--depth", k->depth, "Window depth")->required()->check(CLI::NonNegativeNumber);
  kern->add_option("--samples", k->samples, "Sample count")->check(CLI::PositiveNumber)->capture_default_str();
  kern->add_option("--pairs", k->pairs, "Covariance pairs, e.g. e:e,e:s1");
  kern->add_flag("--theta", k->theta, "Also report level-average covariances");
  kern->add_flag("--strict", k->strict, "Exit 1 when an estimate misses its 99% interval");
  kern->callback([k, &globals, &outcome] {
    const auto alpha = io::parse_alpha(k->alpha, k->q, k->depth);
    const auto trunc = hpd::truncate(alpha.arity(), k->depth);
    const auto a = hpd::branching_toeplitz(alpha, trunc);
    const auto batch = hpd::sample_from_kernel(a, k->samples, globals.seed, globals.threads);
    const auto pairs = k->pairs.empty() ? default_pairs(batch.samples.cols()) : parse_pairs(k->pairs, batch.labels);
    std::vector<double> theory;
    for (const auto& [i, j] : pairs) theory.push_back(a(i, j).real());
    bool all_pass = true;
    outcome.command = "simulate kernel";
    outcome.result = {{"batch", batch.provenance},
                      {"stats", stats_json(hpd::empirical_cov(batch.samples, pairs), batch.labels, theory, all_pass)}};
    if (k->theta) {
      const double sq = std::sqrt(static_cast<double>(alpha.arity()));
      outcome.result["theta"] = theta_stats(
          hpd::theta_average(batch, trunc), [&](int n) { return std::pow(sq, n) * alpha(n).real(); }, all_pass);
    }
    outcome.result["all_within_ci99"] = all_pass;
    outcome.passed = all_pass || !k->strict;
    outcome.csv = io::to_csv(batch);
  });
}

void predict_commands(CLI::App& app, const Globals& globals, Outcome& outcome) {
  auto* predict = app.add_subcommand("predict", "One-step prediction distances");
  predict->require_subcommand(1);

  struct Tq {
    std::string measure;
    int q = 2;
    std::string depths;
    std::string reduction = "auto";
  };
  auto t = state<Tq>();
  auto* tq = predict->add_subcommand("tq", "Szego value on T_q against finite oracles");
  tq->add_option("--measure", t->measure, "Spectral measure nu_alpha")->required();
  tq->add_option("--q", t->q, "Arity")->required()->check(CLI::Range(2, 1'000'000));
  tq->add_option("--depths", t->depths, "Depth schedule, e.g. 1,2,4 (default 1,2,3,4,6,8)");
  tq->add_option("--reduction", t->reduction, "Oracle reduction")
      ->check(CLI::IsMember({"auto", "full-tree", "symmetric"}))
      ->capture_default_str();
  tq->callback([t, &globals, &outcome] {
    const auto depths = t->depths.empty() ? hpd::kDefaultDepthSchedule : parse_int_list(t->depths, "--depths");
    const auto report = hpd::predict_tq(io::parse_measure(t->measure), t->q, depths, parse_reduction(t->reduction),
                                        globals.grid.value_or(hpd::kDefaultGrid), globals.tol.value_or(1e-6));
    outcome.command = "predict tq";
    outcome.result = io::to_json(report);
    std::ostringstream csv;
    csv.precision(17);
    csv << "depth,vertices,distance,method\n";
    for (const auto& o : report.oracle) csv << o.depth << ',' << o.vertices << ',' << o.distance << ',' << o.method << '\n';
    csv << "inf,," << report.szego_value << ",szego\n";
    outcome.csv = csv.str();
  });

  struct Tq1 {
    std::string measure;
    int q = 2;
  };
  auto s = state<Tq1>();
  auto* tq1 = predict->add_subcommand("tq1", "Closed-form prediction distance on T(q;1)");
  tq1->add_option("--measure", s->measure, "Spectral measure")->required();
  tq1->add_option("--q", s->q, "Arity")->required()->check(CLI::Range(2, 1'000'000));
  tq1->callback([s, &globals, &outcome] {
    const auto p = hpd::predict_tq1(io::parse_measure(s->measure), s->q, globals.grid.value_or(hpd::kDefaultGrid));
    outcome.command = "predict tq1";
    outcome.result = io::to_json(p);
    outcome.passed = p.valid;
  });

  struct Dist {
    std::string matrix;
    std::string target;
  };
  auto d = state<Dist>();
  auto* dist = predict->add_subcommand("distance", "Distance from one coordinate to the span of the rest");
  dist->add_option("--matrix", d->matrix, "Gram matrix JSON")->required();
  dist->add_option("--target", d->target, "Target label or row index")->required();
  dist->callback([d, &globals, &outcome] {
    const auto a = io::parse_matrix(d->matrix);
    Eigen::Index target = 0;
    if (const auto by_label = a.index_of(d->target)) {
      target = *by_label;
    } else {
      target = parse_int_list(d->target, "--target").front();
    }
    outcome.command = "predict distance";
    outcome.result = {{"target", target},
                      {"distance", hpd::finite_distance(a, target, globals.tol.value_or(hpd::kPsdTolerance))}};
  });
}

void criterion_commands(CLI::App& app, const Globals& globals, Outcome& outcome) {
  auto* crit = app.add_subcommand("criterion", "Admissibility tests for spectral measures");
  crit->require_subcommand(1);

  struct Tq1 {
    std::string measure;
    int q = 2;
    int oracle = 0;
  };
  auto t = state<Tq1>();
  auto* tq1 = crit->add_subcommand("tq1", "Geometric-mean criterion on T(q;1)");
  tq1->add_option("--measure", t->measure, "Spectral measure")->required();
  tq1->add_option("--q", t->q, "Arity")->required()->check(CLI::Range(2, 1'000'000));
  tq1->add_option("--oracle", t->oracle, "Also test C_n for n = 1..n_max")->check(CLI::Range(1, hpd::kCnMaxOrder));
  tq1->callback([t, &globals, &outcome] {
    const auto mu = io::parse_measure(t->measure);
    const auto report = hpd::tq1_criterion(mu, t->q, globals.grid.value_or(hpd::kDefaultGrid),
                                           globals.tol.value_or(hpd::kCriterionTolerance));
    outcome.command = "criterion tq1";
    outcome.result = io::to_json(report);
    if (t->oracle > 0) outcome.result["oracle"] = io::to_json(hpd::cn_oracle(mu, t->q, t->oracle));
    outcome.passed = report.holds;
  });

  struct Cn {
    std::string measure;
    int q = 2;
    int n = 1;
  };
  auto c = state<Cn>();
  auto* cn = crit->add_subcommand("cn", "The block matrix C_n on the T(q;1) window");
  cn->add_option("--measure", c->measure, "Spectral measure")->required();
  cn->add_option("--q", c->q, "Arity")->required()->check(CLI::Range(2, 1'000'000));
  cn->add_option("--n", c->n, "Vertices per ray")->required()->check(CLI::Range(1, hpd::kCnMaxOrder));
  cn->callback([c, &globals, &outcome] {
    const auto m = hpd::build_cn(io::parse_measure(c->measure), c->q, c->n);
    const auto psd = hpd::psd_check(m, globals.tol.value_or(hpd::kPsdTolerance));
    outcome.command = "criterion cn";
    outcome.result = {{"matrix", io::to_json(m)}, {"psd", io::to_json(psd)}};
    outcome.passed = psd.psd;
    outcome.csv = io::to_csv(m);
  });

  struct Two {
    int q = 2;
    double a = -1.0;
    double b = -1.0;
  };
  auto w = state<Two>();
  auto* two = crit->add_subcommand("two-level", "Two-level densities a on half the circle, b on the rest");
  two->add_option("--q", w->q, "Arity")->required()->check(CLI::Range(2, 1'000'000));
  two->add_option("--a", w->a, "Level on A")->check(CLI::PositiveNumber);
  two->add_option("--b", w->b, "Level on the complement")->check(CLI::PositiveNumber);
  two->callback([w, &globals, &outcome] {
    outcome.command = "criterion two-level";
    outcome.result = {{"bounds", io::to_json(hpd::two_level_bounds(w->q))}};
    if ((w->a > 0.0) != (w->b > 0.0)) throw hpd::InputError("--a and --b go together");
    if (w->a > 0.0) {
      const auto check = hpd::two_level_check(w->q, w->a, w->b, globals.tol.value_or(1e-12));
      outcome.result["check"] = io::to_json(check);
      outcome.passed = check.holds;
    }
  });

  struct Sup {
    std::string g;
    int q = 2;
  };
  auto s = state<Sup>();
  auto* sup = crit->add_subcommand("sup-norm", "Sufficient condition ||g||_inf <= log(q/(q-1))/2 for e^g");
  sup->add_option("--g", s->g, "Real trigonometric polynomial")->required();
  sup->add_option("--q", s->q, "Arity")->required()->check(CLI::Range(2, 1'000'000));
  sup->callback([s, &globals, &outcome] {
    const auto report = hpd::sup_norm_sufficient(io::parse_trig(s->g), s->q, globals.grid.value_or(hpd::kDefaultGrid));
    outcome.command = "criterion sup-norm";
    outcome.result = io::to_json(report);
  });

  struct Fourier {
    std::string measure, tree;
    int n_max = 8;
  };
  auto f = state<Fourier>();
  auto* fourier = crit->add_subcommand("fourier", "Descendant-count bound on Fourier coefficients");
  fourier->add_option("--measure", f->measure, "Spectral measure")->required();
  fourier->add_option("--tree", f->tree, "Tree JSON")->required();
  fourier->add_option("--n-max", f->n_max, "Largest n")->check(CLI::PositiveNumber)->capture_default_str();
  fourier->callback([f, &globals, &outcome] {
    const auto report = hpd::fourier_bound_check(io::parse_measure(f->measure), io::parse_tree(f->tree), f->n_max,
                                                 globals.tol.value_or(1e-9));
    outcome.command = "criterion fourier";
    outcome.result = io::to_json(report);
    outcome.passed = report.violations.empty();
  });
}

void hankel_commands(CLI::App& app, const Globals& globals, Outcome& outcome) {
  auto* hankel = app.add_subcommand("hankel", "Hankel operators with Poisson-type symbols");
  hankel->require_subcommand(1);

  struct Verify {
    std::string which;
    std::string measure;
    double r = -1.0;
    std::string f;
    int n = 0;
    std::string b0;
    int nsym = 128;
  };
  auto v = state<Verify>();
  auto* verify = hankel->add_subcommand("verify", "Grid check of a weighted L^inf inequality");
  verify->add_option("--which", v->which, "Inequality")
      ->required()
      ->check(CLI::IsMember({"two-weight", "en", "smoothed"}));
  verify->add_option("--measure", v->measure, "Measure mu")->required();
  verify->add_option("--r", v->r, "Poisson radius (two-weight)");
  verify->add_option("--f", v->f, "Trigonometric polynomial f")->required();
  verify->add_option("--N", v->n, "Dilation N (en)")->check(CLI::PositiveNumber);
  verify->add_option("--B0", v->b0, "Analytic polynomial B0 of degree <= N-1 (en)");
  verify->add_option("--nsym", v->nsym, "Harmonics kept from sampled densities")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->callback([v, &globals, &outcome] {
    hpd::HankelOptions opts;
    opts.grid = globals.grid.value_or(opts.grid);
    opts.tol = globals.tol.value_or(opts.tol);
    opts.symbol_truncation = v->nsym;
    const auto mu = io::parse_measure(v->measure);
    const auto f = io::parse_trig(v->f);
    hpd::InequalityReport report;
    if (v->which == "two-weight") {
      if (v->r < 0.0) throw hpd::InputError("--r is required for the two-weight inequality");
      report = hpd::two_weight_check(mu, v->r, f, opts);
    } else if (v->which == "en") {
      if (v->n < 1 || v->b0.empty()) throw hpd::InputError("--N and --B0 are required for the E_N inequality");
      report = hpd::en_inequality_check(mu, io::parse_trig(v->b0), f, v->n, opts);
    } else {
      report = hpd::smoothed_inequality_check(mu, f, opts);
    }
    outcome.command = "hankel verify";
    outcome.result = io::to_json(report);
    outcome.passed = report.holds;
  });

  struct Bounded {
    std::string symbol;
    bool truncated = false;
  };
  auto bd = state<Bounded>();
  auto* bounded = hankel->add_subcommand("bounded", "H^2 -> L^inf boundedness verdict for a symbol");
  bounded->add_option("--symbol", bd->symbol, "Symbol JSON")->required();
  bounded->add_flag("--truncated", bd->truncated, "Treat a trig symbol as the truncation of a series");
  bounded->callback([bd, &outcome] {
    const auto input = io::parse_symbol(bd->symbol);
    const auto report = hpd::boundedness_conditions(input.poly, input.truncated || bd->truncated);
    outcome.command = "hankel bounded";
    outcome.result = io::to_json(report);
  });

  struct Norm {
    std::string symbol;
    int n_trunc = 64;
  };
  auto nm = state<Norm>();
  auto* norm = hankel->add_subcommand("norm", "Grid value of the H^2 -> L^inf norm");
  norm->add_option("--symbol", nm->symbol, "Symbol JSON")->required();
  norm->add_option("--n-trunc", nm->n_trunc, "Last n in the sum")->check(CLI::NonNegativeNumber)->capture_default_str();
  norm->callback([nm, &globals, &outcome] {
    const auto input = io::parse_symbol(nm->symbol);
    outcome.command = "hankel norm";
    outcome.result = {{"n_trunc", nm->n_trunc},
                      {"norm", hpd::h2_linf_norm(input.poly, nm->n_trunc, globals.grid.value_or(hpd::kDefaultGrid))}};
  });

  struct Apply {
    std::string phi, f;
  };
  auto ap = state<Apply>();
  auto* apply = hankel->add_subcommand("apply", "Coefficients of R_-(phi f)");
  apply->add_option("--phi", ap->phi, "Symbol JSON")->required();
  apply->add_option("--f", ap->f, "Trigonometric polynomial f")->required();
  apply->callback([ap, &outcome] {
    outcome.command = "hankel apply";
    outcome.result = io::to_json(hpd::hankel_apply(io::parse_symbol(ap->phi).poly, io::parse_trig(ap->f)));
  });

  struct Hlp {
    std::string a, b;
  };
  auto h = state<Hlp>();
  auto* hlp = hankel->add_subcommand("hlp", "Hilbert-type pairing against 4 ||a|| ||b||");
  hlp->add_option("--a", h->a, "Non-negative sequence a_1, a_2, ...")->required();
  hlp->add_option("--b", h->b, "Non-negative sequence b_1, b_2, ...")->required();
  hlp->callback([h, &outcome] {
    const auto res = hpd::hlp_pairing(io::parse_real_sequence(h->a), io::parse_real_sequence(h->b));
    outcome.command = "hankel hlp";
    outcome.result = io::to_json(res);
    outcome.passed = res.holds;
  });
}

void szego_command(CLI::App& app, const Globals& globals, Outcome& outcome) {
  struct Szego {
    std::string measure;
    double log_bound = -1.0;
  };
  auto s = state<Szego>();
  auto* szego = app.add_subcommand("szego", "Geometric mean of the absolutely continuous density");
  szego->add_option("--measure", s->measure, "Measure")->required();
  szego->add_option("--log-bound", s->log_bound, "Also test the Poisson log bound at this r");
  szego->callback([s, &globals, &outcome] {
    const auto mu = io::parse_measure(s->measure);
    const std::size_t grid = globals.grid.value_or(hpd::kDefaultGrid);
    outcome.command = "szego";
    outcome.result = io::to_json(hpd::szego_mean(mu, grid));
    if (s->log_bound >= 0.0) {
      const auto b = hpd::poisson_log_bound(mu, s->log_bound, grid, globals.tol.value_or(1e-9));
      outcome.result["log_bound"] = io::to_json(b);
      outcome.passed = b.holds;
    }
  });
}

}  // namespace

void register_commands(CLI::App& app, const Globals& globals, Outcome& outcome) {
  app.fallthrough();
  tree_commands(app, globals, outcome);
  kernel_commands(app, globals, outcome);
  hpd_commands(app, globals, outcome);
  simulate_commands(app, globals, outcome);
  predict_commands(app, globals, outcome);
  criterion_commands(app, globals, outcome);
  hankel_commands(app, globals, outcome);
  szego_command(app, globals, outcome);
}

}  // namespace hpdtool
