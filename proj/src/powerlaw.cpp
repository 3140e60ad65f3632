#include "oumv/powerlaw.hpp"

#include <algorithm>
#include <boost/math/special_functions/zeta.hpp>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oumv {

void PowerLawParams::validate() const {
  if (beta <= 0) throw std::invalid_argument("power law: beta must be positive");
  switch (variant) {
    case Variant::exact: break;
    case Variant::beta_varying:
      if (beta1 <= 0 || beta2 <= 0) throw std::invalid_argument("power law: beta1, beta2 must be positive");
      break;
    case Variant::additive:
      if (c < 0) throw std::invalid_argument("power law: additive slack must be non-negative");
      break;
    case Variant::multiplicative:
      if (epsilon < 0) throw std::invalid_argument("power law: epsilon must be non-negative");
      break;
  }
}

double zeta(double s) { return boost::math::zeta(s); }

std::int64_t power_law_count(double alpha, double beta, int d) {
  long double x = std::exp(static_cast<long double>(alpha)) / std::pow(static_cast<long double>(d), static_cast<long double>(beta));
  return static_cast<std::int64_t>(std::floor(x * (1 + 1e-12L)));
}

int max_realisable_degree(double alpha, double beta) {
  int d = 1;
  if (power_law_count(alpha, beta, 1) < 1) return 0;
  while (power_law_count(alpha, beta, d + 1) >= 1) ++d;
  return d;
}

PowerLawReport check_power_law(const std::map<int, std::int64_t>& histogram, const PowerLawParams& params) {
  params.validate();
  PowerLawReport rep;
  int dmax = max_realisable_degree(params.alpha, params.beta);
  if (params.variant == PowerLawParams::Variant::beta_varying)
    dmax = std::max({dmax, max_realisable_degree(params.alpha, params.beta1), max_realisable_degree(params.alpha, params.beta2)});
  for (const auto& [d, c] : histogram)
    if (d > dmax && c > 0) dmax = d;
  std::int64_t over = 0, under = 0;
  for (int d = 1; d <= dmax; ++d) {
    auto it = histogram.find(d);
    std::int64_t obs = it == histogram.end() ? 0 : it->second;
    double t = static_cast<double>(power_law_count(params.alpha, params.beta, d));
    DegreeCheck chk{d, obs, t, t, true};
    bool checked = true;
    switch (params.variant) {
      case PowerLawParams::Variant::exact: break;
      case PowerLawParams::Variant::beta_varying: {
        double t1 = static_cast<double>(power_law_count(params.alpha, params.beta1, d));
        double t2 = static_cast<double>(power_law_count(params.alpha, params.beta2, d));
        chk.lower = std::min(t1, t2);
        chk.upper = std::max(t1, t2);
        break;
      }
      case PowerLawParams::Variant::additive:
        chk.lower = t - params.c;
        chk.upper = t + params.c;
        checked = t >= 1;
        break;
      case PowerLawParams::Variant::multiplicative:
        chk.lower = t / (1 + params.epsilon);
        chk.upper = t * (1 + params.epsilon);
        break;
    }
    double o = static_cast<double>(obs);
    chk.ok = !checked || (o >= chk.lower - 1e-9 && o <= chk.upper + 1e-9);
    if (!chk.ok) rep.pass = false;
    std::int64_t ti = static_cast<std::int64_t>(t);
    if (obs != ti) ++rep.deviating_classes;
    if (obs > ti) over += obs - ti;
    if (obs < ti) under += ti - obs;
    rep.degrees.push_back(chk);
  }
  rep.deviating_nodes = std::max(over, under);
  return rep;
}

double alpha_for_counts(const std::map<int, std::int64_t>& need, double beta) {
  double alpha = 0.0;
  for (const auto& [d, c] : need) {
    if (d < 1 || c < 1) continue;
    alpha = std::max(alpha, std::log(static_cast<double>(c)) + beta * std::log(static_cast<double>(d)));
  }
  alpha += 1e-9;
  for (int guard = 0; guard < 1000; ++guard) {
    bool ok = true;
    for (const auto& [d, c] : need)
      if (d >= 1 && power_law_count(alpha, beta, d) < c) ok = false;
    if (ok) return alpha;
    alpha += 1e-6;
  }
  return alpha;
}

PowerLawHost generate_power_law_host(double alpha, double beta, std::uint64_t seed) {
  PowerLawHost host;
  host.alpha = alpha;
  host.beta = beta;
  int dmax = max_realisable_degree(alpha, beta);
  std::vector<int> degree;
  std::int64_t sum = 0;
  for (int d = 1; d <= dmax; ++d) {
    std::int64_t c = power_law_count(alpha, beta, d);
    host.targets[d] = c;
    for (std::int64_t k = 0; k < c; ++k) degree.push_back(d);
    sum += c * d;
  }
  if (sum % 2 != 0) {
    // Drop one pendant node; the only deviation the generator introduces.
    auto it = std::find(degree.begin(), degree.end(), 1);
    if (it == degree.end()) throw std::runtime_error("power law host: cannot fix parity");
    degree.erase(it);
    host.parity_fix = 1;
  }
  std::mt19937_64 rng(seed);
  std::shuffle(degree.begin(), degree.end(), rng);
  int n = static_cast<int>(degree.size());
  host.graph = DynamicGraph(n);
  host.graph.set_logging(false);

  // Havel-Hakimi over residual-degree buckets.
  std::vector<int> residual = degree;
  std::vector<std::vector<NodeId>> bucket(dmax + 1);
  for (NodeId v = 0; v < n; ++v) bucket[residual[v]].push_back(v);
  int top = dmax;
  for (int step = 0; step < n; ++step) {
    while (top > 0 && bucket[top].empty()) --top;
    if (top == 0) break;
    NodeId v = bucket[top].back();
    bucket[top].pop_back();
    int need = residual[v];
    residual[v] = 0;
    std::vector<NodeId> chosen;
    for (int b = top; b >= 1 && static_cast<int>(chosen.size()) < need; --b) {
      auto& bk = bucket[b];
      while (!bk.empty() && static_cast<int>(chosen.size()) < need) {
        chosen.push_back(bk.back());
        bk.pop_back();
      }
    }
    if (static_cast<int>(chosen.size()) < need) throw std::runtime_error("power law host: degree sequence not graphical");
    for (NodeId w : chosen) {
      host.graph.add_static_edge(v, w);
      --residual[w];
    }
    // Reinsert in reverse so the original relative order is kept.
    for (auto it = chosen.rbegin(); it != chosen.rend(); ++it)
      if (residual[*it] > 0) bucket[residual[*it]].push_back(*it);
  }
  host.graph.set_logging(true);
  return host;
}

namespace {

class Surgery {
 public:
  Surgery(DynamicGraph& g, std::mt19937_64& rng) : g_(g), rng_(rng), freed_(g.node_count(), 0) {}

  std::vector<NodeId> nodes_of_degree(int d) {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < g_.node_count(); ++v)
      if (!freed_[v] && g_.degree(v) == d) out.push_back(v);
    std::shuffle(out.begin(), out.end(), rng_);
    return out;
  }

  void mark(NodeId v) { freed_[v] = 1; }

  // Pendant u (neighbor w) and degree-3 v (neighbor x): delete uw, vx; add xw.
  bool pendant_via_degree3(NodeId& freed_node) {
    auto ones = nodes_of_degree(1);
    auto threes = nodes_of_degree(3);
    for (NodeId u : ones) {
      NodeId w = g_.neighbors(u)[0];
      for (NodeId v : threes) {
        if (v == w || v == u) continue;
        for (NodeId x : g_.neighbors(v)) {
          if (x == u || x == w || g_.has_edge(x, w)) continue;
          g_.remove_static_edge(u, w);
          g_.remove_static_edge(v, x);
          g_.add_static_edge(x, w);
          mark(u);
          freed_node = u;
          return true;
        }
      }
    }
    return false;
  }

  // Two nodes of equal degree d <= 3 with disjoint neighborhoods; their neighbors are
  // paired up by d new edges.
  bool pair_of_degree(int d, NodeId& a_out, NodeId& b_out) {
    auto cand = nodes_of_degree(d);
    std::size_t limit = std::min<std::size_t>(cand.size(), 400);
    for (std::size_t i = 0; i < limit; ++i) {
      NodeId a = cand[i];
      std::vector<NodeId> na = g_.neighbors(a);
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        NodeId b = cand[j];
        std::vector<NodeId> nb = g_.neighbors(b);
        if (std::find(na.begin(), na.end(), b) != na.end()) continue;
        bool clash = false;
        for (NodeId x : na)
          if (std::find(nb.begin(), nb.end(), x) != nb.end()) clash = true;
        if (clash) continue;
        std::sort(nb.begin(), nb.end());
        do {
          bool ok = true;
          for (int k = 0; k < d && ok; ++k) ok = !g_.has_edge(na[k], nb[k]);
          if (!ok) continue;
          for (NodeId x : na) g_.remove_static_edge(a, x);
          for (NodeId y : nb) g_.remove_static_edge(b, y);
          for (int k = 0; k < d; ++k) g_.add_static_edge(na[k], nb[k]);
          mark(a);
          mark(b);
          a_out = a;
          b_out = b;
          return true;
        } while (std::next_permutation(nb.begin(), nb.end()));
      }
    }
    return false;
  }

  // Degree-2 node u with non-adjacent neighbors: replace u1-u-u2 by u1-u2.
  bool suppress_degree2(NodeId& freed_node) {
    for (NodeId u : nodes_of_degree(2)) {
      NodeId a = g_.neighbors(u)[0], b = g_.neighbors(u)[1];
      if (g_.has_edge(a, b)) continue;
      g_.remove_static_edge(u, a);
      g_.remove_static_edge(u, b);
      g_.add_static_edge(a, b);
      mark(u);
      freed_node = u;
      return true;
    }
    return false;
  }

  // Last resort for an odd leftover: isolate a node of degree d, re-pairing as many of
  // its neighbors as possible. Returns the number of neighbors left one degree short.
  int isolate(int d, NodeId& freed_node) {
    auto cand = nodes_of_degree(d);
    if (cand.empty()) return -1;
    NodeId u = cand[0];
    std::vector<NodeId> nb = g_.neighbors(u);
    for (NodeId x : nb) g_.remove_static_edge(u, x);
    int shortfall = 0;
    std::size_t k = 0;
    for (; k + 1 < nb.size(); k += 2) {
      if (!g_.has_edge(nb[k], nb[k + 1]))
        g_.add_static_edge(nb[k], nb[k + 1]);
      else
        shortfall += 2;
    }
    if (k < nb.size()) ++shortfall;
    mark(u);
    freed_node = u;
    return shortfall;
  }

 private:
  DynamicGraph& g_;
  std::mt19937_64& rng_;
  std::vector<char> freed_;
};

}  // namespace

MakeSpaceResult make_space(DynamicGraph& host, const std::map<int, std::int64_t>& need, std::mt19937_64& rng) {
  MakeSpaceResult res;
  for (const auto& [d, c] : need)
    if (c > 0 && (d < 1 || d > 3)) {
      res.failure = "make space supports degree classes 1..3 only";
      return res;
    }
  auto get = [&](int d) {
    auto it = need.find(d);
    return it == need.end() ? std::int64_t{0} : it->second;
  };
  std::int64_t r1 = get(1), r2 = get(2), r3 = get(3);
  Surgery s(host, rng);
  auto fail = [&](const std::string& what) {
    res.failure = what;
    return res;
  };

  // Pendant nodes: first via degree-3 partners (each turns one degree-3 node into degree 2),
  // then in pairs.
  std::int64_t k1 = std::min(r1, r3);
  for (std::int64_t k = 0; k < k1; ++k) {
    NodeId u;
    if (!s.pendant_via_degree3(u)) return fail("no pendant/degree-3 rewiring partner");
    res.freed[1].push_back(u);
  }
  std::int64_t left1 = r1 - k1;
  while (left1 >= 2) {
    NodeId a, b;
    if (!s.pair_of_degree(1, a, b)) return fail("no pendant pair");
    res.freed[1].push_back(a);
    res.freed[1].push_back(b);
    left1 -= 2;
  }
  if (left1 == 1) {
    NodeId u;
    int short_by = s.isolate(1, u);
    if (short_by < 0) return fail("no pendant node left");
    res.freed[1].push_back(u);
    res.deviations += short_by;
  }

  std::int64_t f2 = r2 + k1;
  std::int64_t taken2 = 0;
  while (f2 - taken2 >= 2) {
    NodeId a, b;
    if (!s.pair_of_degree(2, a, b)) break;
    res.freed[2].push_back(a);
    res.freed[2].push_back(b);
    taken2 += 2;
  }
  while (taken2 < f2) {
    NodeId u;
    if (!s.suppress_degree2(u)) return fail("no suppressible degree-2 node");
    res.freed[2].push_back(u);
    ++taken2;
  }

  std::int64_t f3 = r3 - k1;
  while (f3 >= 2) {
    NodeId a, b;
    if (!s.pair_of_degree(3, a, b)) return fail("no degree-3 pair");
    res.freed[3].push_back(a);
    res.freed[3].push_back(b);
    f3 -= 2;
  }
  if (f3 == 1) {
    NodeId u;
    int short_by = s.isolate(3, u);
    if (short_by < 0) return fail("no degree-3 node left");
    res.freed[3].push_back(u);
    res.deviations += short_by;
  }

  // The degree-2 class received k1 extra nodes from the first procedure; the freed list
  // for class 2 has r2 + k1 entries, of which r2 are used and k1 compensate.
  // Every freed node is isolated; callers place reduction nodes on them.
  res.ok = true;
  return res;
}

std::map<int, std::int64_t> degree_need(const DynamicGraph& reduction) {
  std::map<int, std::int64_t> rd;
  for (NodeId v = 0; v < reduction.node_count(); ++v) ++rd[reduction.degree(v)];
  return rd;
}

PreparedHost prepare_host(const std::map<int, std::int64_t>& need, double beta, int slack, std::uint64_t seed,
                          int max_attempts) {
  if (need.count(0) && need.at(0) > 0) throw std::invalid_argument("reduction graph has isolated nodes");
  std::map<int, std::int64_t> want;
  for (const auto& [d, c] : need) want[d] = 2 * c + slack + 1;
  double alpha = alpha_for_counts(want, beta);
  std::string last_failure;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(attempt));
    PowerLawHost host = generate_power_law_host(alpha, beta, rng());
    MakeSpaceResult ms = make_space(host.graph, need, rng);
    if (!ms.ok) {
      last_failure = ms.failure;
      alpha += std::log(1.25);
      continue;
    }
    std::vector<char> drop(host.graph.node_count(), 0);
    for (const auto& [d, list] : ms.freed)
      for (NodeId v : list) drop[v] = 1;
    std::vector<NodeId> keep;
    for (NodeId v = 0; v < host.graph.node_count(); ++v)
      if (!drop[v]) keep.push_back(v);
    PreparedHost p;
    p.graph = induced_subgraph(host.graph, keep);
    p.need = need;
    p.alpha = alpha;
    p.beta = beta;
    p.targets = host.targets;
    p.parity_fix = host.parity_fix;
    p.deviations = ms.deviations;
    p.attempts = attempt;
    return p;
  }
  throw std::runtime_error("power law host too small after " + std::to_string(max_attempts) +
                           " attempts (last failure: " + last_failure + "); required N > " +
                           std::to_string(std::exp(alpha) * zeta(beta)));
}

Embedding embed(const DynamicGraph& reduction, const PreparedHost& host) {
  if (degree_need(reduction) != host.need) throw std::invalid_argument("reduction degrees differ from the prepared host");
  Embedding e;
  e.reduction_nodes = reduction.node_count();
  e.host_nodes = host.graph.node_count();
  e.alpha = host.alpha;
  e.beta = host.beta;
  e.targets = host.targets;
  e.parity_fix = host.parity_fix;
  e.deviations = host.deviations;
  e.attempts = host.attempts;
  int shift = reduction.node_count();
  e.graph = DynamicGraph(shift + host.graph.node_count());
  e.graph.set_logging(false);
  for (auto [a, b] : reduction.edges()) e.graph.add_static_edge(a, b);
  for (auto [a, b] : host.graph.edges()) e.graph.add_static_edge(a + shift, b + shift);
  e.graph.set_logging(true);
  return e;
}

Embedding embed_in_power_law_host(const DynamicGraph& reduction, double beta, int slack, std::uint64_t seed,
                                  int max_attempts) {
  return embed(reduction, prepare_host(degree_need(reduction), beta, slack, seed, max_attempts));
}

}  // namespace oumv
