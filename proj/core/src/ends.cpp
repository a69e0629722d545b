#include "semiends/ends.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "json.hpp"
#include "semiends/spec_io.hpp"

namespace semiends::ends {

using models::Element;

EndContext::EndContext(models::SpecPtr spec, cayley::BallLimits limits)
    : spec_(std::move(spec)), limits_(limits) {}

const cayley::CayleyBall& EndContext::ball(int radius) {
  auto it = balls_.find(radius);
  if (it == balls_.end()) {
    auto built = std::make_unique<cayley::CayleyBall>(
        cayley::build_ball(spec_, radius, limits_));
    it = balls_.emplace(radius, std::move(built)).first;
  }
  return *it->second;
}

const std::vector<int>& EndContext::predecessors(int radius, int vertex,
                                                 int label) {
  auto it = preds_.find(radius);
  if (it == preds_.end()) {
    const cayley::CayleyBall& b = ball(radius);
    std::vector<std::vector<std::vector<int>>> table(
        b.size(),
        std::vector<std::vector<int>>(spec_->generators().size()));
    for (const auto& e : b.edges) {
      table[e.dst][e.label].push_back(e.src);
    }
    for (auto& row : table) {
      for (auto& cell : row) {
        std::sort(cell.begin(), cell.end());
      }
    }
    it = preds_.emplace(radius, std::move(table)).first;
  }
  return it->second.at(vertex).at(label);
}

namespace {

std::vector<words::Letter> stream_labels(const PeriodicRay& ray, int count) {
  std::vector<words::Letter> labels;
  labels.reserve(count);
  for (int i = 0; i < count; ++i) {
    if (i < static_cast<int>(ray.prefix.size())) {
      labels.push_back(ray.prefix[i]);
    } else {
      size_t j = (i - ray.prefix.size()) % ray.period.size();
      labels.push_back(ray.period[j]);
    }
  }
  return labels;
}

}  // namespace

RayEval ray_vertices(EndContext& ctx, const PeriodicRay& ray, int horizon) {
  if (horizon < 1) {
    throw Error("ray_vertices: horizon must be at least 1");
  }
  if (ray.period.empty()) {
    throw Error("ray_vertices: period must be non-empty");
  }
  const auto& spec = ctx.spec();
  const size_t ngens = spec->generators().size();
  for (const auto* w : {&ray.base, &ray.prefix, &ray.period}) {
    for (words::Letter x : *w) {
      if (x >= ngens) {
        throw Error("ray_vertices: label out of range");
      }
    }
  }

  RayEval eval;
  std::map<std::string, size_t> seen;
  auto push = [&](Element v, int est) -> bool {
    std::string key = spec->format(v);
    auto [it, inserted] = seen.emplace(key, eval.vertices.size());
    if (!inserted) {
      eval.status = RayEval::Status::repeats;
      eval.collision = {it->second, eval.vertices.size()};
      eval.fail_index = eval.vertices.size();
      return false;
    }
    eval.vertices.push_back(std::move(v));
    eval.keys.push_back(std::move(key));
    eval.depth_estimate.push_back(est);
    return true;
  };

  Element v0 = spec->eval_word(ray.base);
  if (!push(std::move(v0), std::max<int>(1, ray.base.size()))) {
    return eval;
  }
  const std::vector<words::Letter> labels = stream_labels(ray, horizon - 1);

  if (ray.kind == RayKind::ray) {
    for (int i = 0; i < horizon - 1; ++i) {
      Element next =
          spec->multiply(eval.vertices.back(), spec->generators()[labels[i]]);
      if (!push(std::move(next),
                static_cast<int>(ray.base.size()) + i + 1)) {
        return eval;
      }
    }
    return eval;
  }

  // Anti-ray: solve x * gen = current, closed-form where possible and by
  // ball predecessor search otherwise, smallest canonical solution first.
  int radius = static_cast<int>(ray.base.size()) + horizon + 4;
  for (int attempt = 0; attempt < 2; ++attempt) {
    eval = RayEval{};
    seen.clear();
    Element v = spec->eval_word(ray.base);
    if (!push(std::move(v), std::max<int>(1, ray.base.size()))) {
      return eval;
    }
    bool need_larger_ball = false;
    for (int i = 0; i < horizon - 1 && !need_larger_ball; ++i) {
      const Element& gen = spec->generators()[labels[i]];
      const Element& cur = eval.vertices.back();
      auto solutions = spec->right_divide(cur, gen);
      if (solutions.has_value()) {
        if (solutions->empty()) {
          eval.status = RayEval::Status::dead_end;
          eval.fail_index = eval.vertices.size();
          return eval;
        }
        std::sort(solutions->begin(), solutions->end(),
                  [&](const Element& a, const Element& b) {
                    return models::canonical_less(spec->format(a),
                                                  spec->format(b));
                  });
        if (!push((*solutions)[0],
                  static_cast<int>(ray.base.size()) + i + 1)) {
          return eval;
        }
        continue;
      }
      // Predecessor search in a context ball.
      try {
        const cayley::CayleyBall& b = ctx.ball(radius);
        auto idx = b.find_key(eval.keys.back());
        if (!idx) {
          need_larger_ball = true;
          break;
        }
        const auto& preds = ctx.predecessors(radius, *idx, labels[i]);
        if (preds.empty()) {
          need_larger_ball = true;  // retry once before declaring a dead end
          break;
        }
        if (!push(b.vertices[preds[0]], b.depth[preds[0]])) {
          return eval;
        }
      } catch (const CapExceeded&) {
        eval.status = RayEval::Status::cap_exceeded;
        eval.fail_index = eval.vertices.size();
        return eval;
      }
    }
    if (!need_larger_ball) {
      return eval;
    }
    radius += horizon + 8;
  }
  eval.status = RayEval::Status::dead_end;
  eval.fail_index = eval.vertices.size();
  return eval;
}

WalkToRay walk_to_ray(const std::vector<std::string>& walk_keys) {
  if (walk_keys.size() < 2) {
    throw Error("walk_to_ray: walk must have at least 2 vertices");
  }
  WalkToRay out;
  for (const auto& k : walk_keys) {
    ++out.multiplicity[k];
  }
  std::map<std::string, size_t> last;
  for (size_t i = 0; i < walk_keys.size(); ++i) {
    last[walk_keys[i]] = i;
  }
  size_t a = 1;
  out.picked.push_back(a);
  while (true) {
    size_t next = last.at(walk_keys[out.picked.back()]) + 1;
    if (next >= walk_keys.size()) {
      break;
    }
    out.picked.push_back(next);
  }
  return out;
}

ConcatCheck bounded_concat_check(const cayley::CayleyBall& ball,
                                 const std::vector<std::vector<int>>& walks,
                                 int K) {
  ConcatCheck out;
  std::set<int> finals;
  for (size_t w = 0; w < walks.size(); ++w) {
    const auto& walk = walks[w];
    if (walk.empty()) {
      out.precondition_error = "walk " + std::to_string(w) + " is empty";
      return out;
    }
    if (static_cast<int>(walk.size()) - 1 > K) {
      out.precondition_error = "walk " + std::to_string(w) +
                               " longer than the bound K=" + std::to_string(K);
      return out;
    }
    for (size_t i = 0; i + 1 < walk.size(); ++i) {
      const auto& succ = ball.graph.out(walk[i]);
      if (!std::binary_search(succ.begin(), succ.end(), walk[i + 1])) {
        out.precondition_error =
            "walk " + std::to_string(w) + " uses a non-edge at step " +
            std::to_string(i);
        return out;
      }
    }
    if (!finals.insert(walk.back()).second) {
      out.precondition_error = "duplicate final vertex " +
                               ball.keys[walk.back()] + " (walk " +
                               std::to_string(w) + ")";
      return out;
    }
  }

  std::map<int, int> total;
  std::map<int, int> walks_through;
  for (const auto& walk : walks) {
    std::set<int> once(walk.begin(), walk.end());
    for (int v : walk) {
      ++total[v];
    }
    for (int v : once) {
      ++walks_through[v];
    }
  }
  out.pass = true;
  for (const auto& [v, count] : walks_through) {
    // Vertices reachable from v within K steps bound the number of walks
    // that may pass through v, since walk finals are distinct.
    std::vector<int> dist(ball.size(), -1);
    std::vector<int> queue{v};
    dist[v] = 0;
    int reach = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      if (dist[u] == K) {
        continue;
      }
      for (int w2 : ball.graph.out(u)) {
        if (dist[w2] == -1) {
          dist[w2] = dist[u] + 1;
          ++reach;
          queue.push_back(w2);
        }
      }
    }
    if (count > reach) {
      out.pass = false;
    }
  }
  for (const auto& [v, count] : total) {
    if (count > out.max_multiplicity) {
      out.max_multiplicity = count;
      out.max_vertex = v;
    }
  }
  return out;
}

namespace {

void validate_dominance(const digraph::Digraph& g, int alpha0,
                        const std::vector<int>& sigma,
                        const DominanceResult& result) {
  // The prefix must be a path from alpha0.
  if (result.prefix.empty() || result.prefix.front() != alpha0) {
    throw Error("dominance_ray: prefix does not start at alpha0");
  }
  std::set<int> prefix_set;
  for (size_t i = 0; i < result.prefix.size(); ++i) {
    if (!prefix_set.insert(result.prefix[i]).second) {
      throw Error("dominance_ray: prefix repeats a vertex");
    }
    if (i + 1 < result.prefix.size()) {
      const auto& succ = g.out(result.prefix[i]);
      if (!std::binary_search(succ.begin(), succ.end(),
                              result.prefix[i + 1])) {
        throw Error("dominance_ray: prefix uses a non-edge");
      }
    }
  }
  std::set<int> used;
  std::set<int> ends;
  std::set<int> sigma_set(sigma.begin(), sigma.end());
  for (const auto& path : result.connectors) {
    if (path.empty()) {
      throw Error("dominance_ray: empty connector");
    }
    if (!prefix_set.count(path.front())) {
      throw Error("dominance_ray: connector does not start on the prefix");
    }
    if (!sigma_set.count(path.back())) {
      throw Error("dominance_ray: connector does not end in sigma");
    }
    if (!ends.insert(path.back()).second) {
      throw Error("dominance_ray: two connectors share a target");
    }
    for (size_t i = 0; i < path.size(); ++i) {
      if (!used.insert(path[i]).second) {
        throw Error("dominance_ray: connectors are not pairwise disjoint");
      }
      if (i > 0 && prefix_set.count(path[i])) {
        throw Error("dominance_ray: connector re-enters the prefix");
      }
      if (i + 1 < path.size()) {
        const auto& succ = g.out(path[i]);
        if (!std::binary_search(succ.begin(), succ.end(), path[i + 1])) {
          throw Error("dominance_ray: connector uses a non-edge");
        }
      }
    }
  }
}

}  // namespace

DominanceResult dominance_ray(const digraph::Digraph& g, int alpha0,
                              std::vector<int> sigma) {
  std::sort(sigma.begin(), sigma.end());
  sigma.erase(std::unique(sigma.begin(), sigma.end()), sigma.end());
  // Deterministic BFS tree from alpha0 (parents in index order).
  std::vector<int> parent(g.size(), -1);
  std::vector<bool> seen(g.size(), false);
  std::vector<int> queue{alpha0};
  seen[alpha0] = true;
  for (size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int w : g.out(v)) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  std::map<int, std::vector<int>> path_to;
  for (int beta : sigma) {
    if (!seen[beta]) {
      throw Error("dominance_ray: sigma element " + std::to_string(beta) +
                  " unreachable from alpha0");
    }
    std::vector<int> path;
    for (int v = beta; v != -1; v = parent[v]) {
      path.push_back(v);
    }
    std::reverse(path.begin(), path.end());
    path_to[beta] = std::move(path);
  }

  DominanceResult result;
  result.prefix.push_back(alpha0);
  std::vector<int> remaining = sigma;
  while (!remaining.empty()) {
    // Targets sitting at the current vertex get length-0 connectors.
    {
      std::vector<int> keep;
      for (int beta : remaining) {
        if (path_to[beta].size() == 1) {
          result.connectors.push_back({beta});
        } else {
          keep.push_back(beta);
        }
      }
      remaining = std::move(keep);
    }
    if (remaining.empty()) {
      break;
    }
    // Successor carrying the largest subfamily.
    std::map<int, int> via_count;
    for (int beta : remaining) {
      ++via_count[path_to[beta][1]];
    }
    int gamma = -1;
    int best = -1;
    for (const auto& [cand, count] : via_count) {
      if (count > best) {
        best = count;
        gamma = cand;
      }
    }
    std::vector<int> family;
    for (int beta : remaining) {
      if (path_to[beta][1] == gamma) {
        family.push_back(beta);
      }
    }
    // Fix the shortest path in the family.
    int beta1 = family.front();
    for (int beta : family) {
      if (path_to[beta].size() < path_to[beta1].size()) {
        beta1 = beta;
      }
    }
    const std::vector<int> p1 = path_to[beta1];
    // Split the rest of the family at the last vertex shared with p1.
    std::map<size_t, std::vector<int>> classes;
    for (int beta : family) {
      if (beta == beta1) {
        continue;
      }
      std::set<int> verts(path_to[beta].begin(), path_to[beta].end());
      size_t last_shared = 0;
      for (size_t i = 0; i < p1.size(); ++i) {
        if (verts.count(p1[i])) {
          last_shared = i;
        }
      }
      classes[last_shared].push_back(beta);
    }
    size_t m = 1;
    if (!classes.empty()) {
      size_t best_size = 0;
      for (const auto& [pos, members] : classes) {
        if (members.size() > best_size) {
          best_size = members.size();
          m = pos;
        }
      }
      if (m == 0) {
        m = 1;  // the split vertex must advance past the current vertex
      }
    }
    result.connectors.emplace_back(p1.begin() + m, p1.end());
    result.prefix.insert(result.prefix.end(), p1.begin() + 1,
                         p1.begin() + m + 1);
    int alpha_next = p1[m];
    std::vector<int> survivors =
        classes.count(m) ? classes[m] : std::vector<int>{};
    for (int beta : survivors) {
      auto& q = path_to[beta];
      auto it = std::find(q.begin(), q.end(), alpha_next);
      if (it == q.end()) {
        throw Error("dominance_ray: split vertex missing from a path");
      }
      q.erase(q.begin(), it);
    }
    remaining = std::move(survivors);
  }
  validate_dominance(g, alpha0, sigma, result);
  return result;
}

DominanceResult dominance_ray(const cayley::CayleyBall& ball,
                              const std::string& alpha0_key,
                              const std::vector<std::string>& sigma_keys) {
  auto a = ball.find_key(alpha0_key);
  if (!a) {
    throw Error("dominance_ray: alpha0 not in the ball");
  }
  std::vector<int> sigma;
  for (const auto& key : sigma_keys) {
    auto v = ball.find_key(key);
    if (!v) {
      throw Error("dominance_ray: sigma element '" + key +
                  "' not in the ball");
    }
    sigma.push_back(*v);
  }
  return dominance_ray(ball.graph, *a, sigma);
}

namespace {

std::vector<words::Word> words_up_to(size_t ngens, int lo, int hi) {
  std::vector<words::Word> out;
  std::vector<words::Word> level{words::Word{}};
  if (lo <= 0) {
    out.push_back({});
  }
  for (int len = 1; len <= hi; ++len) {
    std::vector<words::Word> next;
    for (const auto& w : level) {
      for (words::Letter x = 0; x < ngens; ++x) {
        words::Word ext = w;
        ext.push_back(x);
        if (len >= lo) {
          out.push_back(ext);
        }
        next.push_back(std::move(ext));
      }
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<PeriodicRay> enumerate_periodic_rays(EndContext& ctx,
                                                 const EnumOptions& opts) {
  if (opts.max_period < 1) {
    throw Error("enumerate_periodic_rays: max_period must be at least 1");
  }
  const auto& spec = ctx.spec();
  const size_t ngens = spec->generators().size();
  const int base_lo = spec->is_monoid() ? 0 : 1;

  // Bases deduplicated by the element they evaluate to, shortest word kept.
  std::vector<words::Word> bases;
  std::set<std::string> base_seen;
  for (const auto& w : words_up_to(ngens, base_lo, opts.base_bound)) {
    std::string key = spec->format(spec->eval_word(w));
    if (base_seen.insert(key).second) {
      bases.push_back(w);
    }
  }
  std::vector<words::Word> periods = words_up_to(ngens, 1, opts.max_period);

  std::vector<PeriodicRay> out;
  std::set<std::string> tails_seen;
  for (const auto& base : bases) {
    for (const auto& period : periods) {
      PeriodicRay ray{base, {}, period, opts.kind};
      RayEval eval = ray_vertices(ctx, ray, opts.horizon);
      if (!eval.ok()) {
        continue;
      }
      std::set<std::string> tail(eval.keys.begin() + opts.horizon / 2,
                                 eval.keys.end());
      std::string tail_key;
      for (const auto& k : tail) {
        tail_key += k;
        tail_key += '\x1f';
      }
      if (tails_seen.insert(tail_key).second) {
        out.push_back(std::move(ray));
      }
    }
  }
  return out;
}

namespace {

// Breadth-first index of elements expressible over the context generators,
// mapping canonical keys to the first (shortest, then lexicographically
// first) word found.
class WordIndex {
 public:
  WordIndex(const models::SpecPtr& spec, size_t cap)
      : spec_(spec), cap_(cap) {
    for (words::Letter x = 0;
         x < static_cast<words::Letter>(spec->generators().size()); ++x) {
      insert(spec->generators()[x], words::Word{x});
    }
    swap_levels();
  }

  std::optional<words::Word> find(const Element& target, int max_len) {
    std::string key = spec_->format(target);
    while (true) {
      auto it = found_.find(key);
      if (it != found_.end()) {
        return it->second;
      }
      if (depth_ >= max_len || frontier_.empty()) {
        return std::nullopt;
      }
      expand();
    }
  }

 private:
  void insert(const Element& e, words::Word w) {
    std::string key = spec_->format(e);
    if (found_.size() >= cap_) {
      throw CapExceeded("translate_ray: word search cap exceeded");
    }
    if (found_.emplace(key, w).second) {
      level_.push_back({e, std::move(w)});
    }
  }

  void swap_levels() {
    frontier_ = std::move(level_);
    level_.clear();
  }

  void expand() {
    for (const auto& [e, w] : frontier_) {
      for (words::Letter x = 0;
           x < static_cast<words::Letter>(spec_->generators().size()); ++x) {
        words::Word ext = w;
        ext.push_back(x);
        insert(spec_->multiply(e, spec_->generators()[x]), std::move(ext));
      }
    }
    swap_levels();
    ++depth_;
  }

  models::SpecPtr spec_;
  size_t cap_;
  int depth_ = 1;
  std::map<std::string, words::Word> found_;
  std::vector<std::pair<Element, words::Word>> frontier_;
  std::vector<std::pair<Element, words::Word>> level_;
};

}  // namespace

TranslateResult translate_ray(EndContext& ctx, const models::Element& s,
                              const PeriodicRay& ray,
                              const TranslateOptions& opts) {
  if (ray.kind != RayKind::ray) {
    throw Error("translate_ray: only forward rays are supported");
  }
  const auto& sub = ctx.spec();
  const size_t na = sub->generators().size();

  bool uses_s = std::any_of(ray.base.begin(), ray.base.end(),
                            [&](words::Letter x) { return x >= na; }) ||
                std::any_of(ray.prefix.begin(), ray.prefix.end(),
                            [&](words::Letter x) { return x >= na; }) ||
                std::any_of(ray.period.begin(), ray.period.end(),
                            [&](words::Letter x) { return x >= na; });
  if (!uses_s) {
    TranslateResult result;
    result.ray = ray;
    result.shared_at_horizon = opts.horizon;
    return result;
  }

  // The ambient spec: the subsemigroup's generators extended by s.
  std::vector<Element> ext_gens = sub->generators();
  ext_gens.push_back(s);
  std::vector<std::string> ext_names = sub->generator_names();
  std::string s_name = "s";
  while (std::find(ext_names.begin(), ext_names.end(), s_name) !=
         ext_names.end()) {
    s_name += "_";
  }
  ext_names.push_back(s_name);
  models::SpecPtr ext = models::SemigroupSpec::with_generators(
      sub, std::move(ext_gens), std::move(ext_names));
  EndContext ext_ctx(ext, ctx.limits());

  const int H = opts.horizon;
  RayEval input = ray_vertices(ext_ctx, ray, H);
  if (!input.ok()) {
    throw Error("translate_ray: input ray invalid at index " +
                std::to_string(input.fail_index));
  }
  std::vector<words::Letter> labels = stream_labels(ray, H - 1);

  WordIndex index(sub, opts.search_cap);
  TranslateResult result;

  // Advance past any leading vertices outside the subsemigroup.
  int start = -1;
  std::optional<words::Word> base_word;
  for (int d = 0; d < H / 2; ++d) {
    base_word = index.find(input.vertices[d], opts.word_budget);
    if (base_word) {
      start = d;
      break;
    }
  }
  if (start < 0) {
    throw Error(
        "translate_ray: no ray vertex lands in the subsemigroup within the "
        "working horizon");
  }
  result.dropped = start;

  std::vector<Element> walk{input.vertices[start]};
  std::vector<std::string> walk_keys{input.keys[start]};
  std::vector<words::Letter> walk_labels;
  int pos = start;
  while (pos < H - 1) {
    words::Letter l = labels[pos];
    if (l < na) {
      walk.push_back(sub->multiply(walk.back(), sub->generators()[l]));
      walk_keys.push_back(sub->format(walk.back()));
      walk_labels.push_back(l);
      ++pos;
      continue;
    }
    // s-initiated segment: find the shortest extension whose product is
    // expressible over the subsemigroup generators.
    int found_i = -1;
    words::Word replacement;
    Element t = s;
    for (int i = 0; i <= opts.max_segment && pos + i < H - 1; ++i) {
      if (i > 0) {
        t = ext->multiply(t, ext->generators()[labels[pos + i]]);
      }
      auto w = index.find(t, opts.word_budget);
      if (w) {
        found_i = i;
        replacement = std::move(*w);
        break;
      }
    }
    if (found_i < 0) {
      throw Error("translate_ray: no replacement found for the segment at "
                  "position " +
                  std::to_string(pos) + " (budget " +
                  std::to_string(opts.word_budget) + ")");
    }
    result.budget_used =
        std::max(result.budget_used, static_cast<int>(replacement.size()));
    for (words::Letter x : replacement) {
      walk.push_back(sub->multiply(walk.back(), sub->generators()[x]));
      walk_keys.push_back(sub->format(walk.back()));
      walk_labels.push_back(x);
    }
    pos += found_i + 1;
    if (walk_keys.back() != input.keys[pos]) {
      throw Error("translate_ray: segment replacement does not rejoin the "
                  "input ray");
    }
  }

  // Straighten the walk, then recover an eventually periodic label stream.
  WalkToRay extraction = walk_to_ray(walk_keys);
  const auto& picked = extraction.picked;
  std::vector<words::Letter> ex_labels;
  for (size_t j = 0; j + 1 < picked.size(); ++j) {
    ex_labels.push_back(walk_labels[picked[j + 1] - 1]);
  }
  const int nl = static_cast<int>(ex_labels.size());
  int period_len = -1;
  int start_at = -1;
  for (int p = 1; p <= nl / 3 && period_len < 0; ++p) {
    for (int d = 0; d + 3 * p <= nl; ++d) {
      bool periodic = true;
      for (int j = d; j + p < nl && periodic; ++j) {
        periodic = ex_labels[j] == ex_labels[j + p];
      }
      if (periodic) {
        period_len = p;
        start_at = d;
        break;
      }
    }
  }
  if (period_len < 0) {
    throw Error("translate_ray: no periodic tail detected at the working "
                "horizon");
  }

  // Base word for the extracted start: the start vertex's word followed by
  // the walk labels up to the picked position.
  words::Word out_base = *base_word;
  out_base.insert(out_base.end(), walk_labels.begin(),
                  walk_labels.begin() + picked[start_at]);
  PeriodicRay out_ray{std::move(out_base),
                      {},
                      words::Word(ex_labels.begin() + start_at,
                                  ex_labels.begin() + start_at + period_len),
                      RayKind::ray};

  // Validate against the extracted vertex sequence.
  const int check_len = nl + 1 - start_at;
  RayEval check = ray_vertices(ctx, out_ray, check_len);
  if (!check.ok()) {
    throw Error("translate_ray: output ray fails distinctness");
  }
  for (int j = 0; j < check_len; ++j) {
    if (check.keys[j] != walk_keys[picked[start_at + j]]) {
      throw Error("translate_ray: output ray deviates from the walk");
    }
  }
  std::set<std::string> input_keys(input.keys.begin(), input.keys.end());
  for (const auto& k : check.keys) {
    if (input_keys.count(k)) {
      ++result.shared_at_horizon;
    }
  }
  result.ray = std::move(out_ray);
  return result;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::equivalent:
      return "Equivalent";
    case Verdict::first_below_second:
      return "FirstBelowSecond";
    case Verdict::second_below_first:
      return "SecondBelowFirst";
    case Verdict::incomparable:
      return "Incomparable";
    case Verdict::unknown:
      return "Unknown";
  }
  return "Unknown";
}

namespace {

struct HorizonData {
  int radius = 0;
  // Sources are the tail [h/2, h); targets the longer window [h/2, 2h),
  // since a connecting path may land arbitrarily far out on the other ray
  // (rays consuming several labels per geometric step would otherwise
  // outrun each other's tails).
  std::vector<int> src1, tgt1, src2, tgt2;  // ball indices
  std::vector<std::string> sep_fwd, sep_bwd;
  int count_fwd = 0, count_bwd = 0;
};

// True iff removing `separator` cuts every path from tail1 to tail2.
bool separator_cuts(const cayley::CayleyBall& ball,
                    const std::vector<std::string>& separator,
                    const std::vector<int>& tail1,
                    const std::vector<int>& tail2) {
  std::vector<bool> removed(ball.size(), false);
  for (const auto& key : separator) {
    auto idx = ball.find_key(key);
    if (idx) {
      removed[*idx] = true;
    }
  }
  std::vector<bool> reach =
      digraph::reachable_set(ball.graph, tail1, &removed);
  for (int t : tail2) {
    if (!removed[t] && reach[t]) {
      return false;
    }
  }
  return true;
}

DirectionEvidence direction_evidence(EndContext& ctx,
                                     const std::vector<int>& horizons,
                                     const std::vector<HorizonData>& data,
                                     bool forward, int k) {
  DirectionEvidence ev;
  ev.horizons = horizons;
  for (const auto& d : data) {
    ev.counts.push_back(forward ? d.count_fwd : d.count_bwd);
  }
  for (size_t i = 1; i < ev.counts.size(); ++i) {
    if (ev.counts[i] < ev.counts[i - 1]) {
      ev.monotone = false;
    }
  }
  const size_t n = ev.counts.size();
  ev.growing = ev.counts[n - 1] >= k && ev.counts[n - 1] > ev.counts[n - 2];
  if (!ev.growing && ev.counts[n - 1] == ev.counts[n - 2] &&
      ev.counts[n - 2] == ev.counts[n - 3]) {
    const auto& sep =
        forward ? data[n - 3].sep_fwd : data[n - 3].sep_bwd;
    bool stable = true;
    for (size_t m = n - 2; m < n && stable; ++m) {
      const cayley::CayleyBall& ball = ctx.ball(data[m].radius);
      stable = forward ? separator_cuts(ball, sep, data[m].src1,
                                        data[m].tgt2)
                       : separator_cuts(ball, sep, data[m].src2,
                                        data[m].tgt1);
    }
    if (stable) {
      ev.stagnant = true;
      ev.separator = sep;
    }
  }
  return ev;
}

}  // namespace

EndVerdict end_compare(EndContext& ctx, const PeriodicRay& r1,
                       const PeriodicRay& r2, const CompareOptions& opts) {
  if (opts.horizons.size() < 3 ||
      !std::is_sorted(opts.horizons.begin(), opts.horizons.end()) ||
      std::adjacent_find(opts.horizons.begin(), opts.horizons.end()) !=
          opts.horizons.end()) {
    throw Error("end_compare: need at least 3 strictly increasing horizons");
  }
  if (opts.k < 1) {
    throw Error("end_compare: threshold k must be positive");
  }
  const int hmax = opts.horizons.back();
  const int window = 2 * hmax;
  RayEval e1 = ray_vertices(ctx, r1, window);
  RayEval e2 = ray_vertices(ctx, r2, window);
  for (const auto* e : {&e1, &e2}) {
    if (!e->ok()) {
      throw Error("end_compare: ray invalid at index " +
                  std::to_string(e->fail_index));
    }
  }

  std::vector<HorizonData> data;
  for (int h : opts.horizons) {
    HorizonData d;
    const int target_end = std::min(2 * h, window);
    int needed = 0;
    for (int i = 0; i < target_end; ++i) {
      needed = std::max({needed, e1.depth_estimate[i], e2.depth_estimate[i]});
    }
    d.radius = needed + opts.radius_slack;
    // Grow until every used vertex is present (anti-ray estimates err low).
    for (int attempt = 0;; ++attempt) {
      const cayley::CayleyBall& ball = ctx.ball(d.radius);
      d.src1.clear();
      d.tgt1.clear();
      d.src2.clear();
      d.tgt2.clear();
      bool missing = false;
      for (int i = h / 2; i < target_end && !missing; ++i) {
        auto a = ball.find_key(e1.keys[i]);
        auto b = ball.find_key(e2.keys[i]);
        if (!a || !b) {
          missing = true;
          break;
        }
        if (i < h) {
          d.src1.push_back(*a);
          d.src2.push_back(*b);
        }
        d.tgt1.push_back(*a);
        d.tgt2.push_back(*b);
      }
      if (!missing) {
        break;
      }
      if (attempt >= 8) {
        throw CapExceeded("end_compare: tail vertices not contained in any "
                          "tried ball");
      }
      d.radius += 4;
    }
    const cayley::CayleyBall& ball = ctx.ball(d.radius);
    auto fwd = cayley::vertex_disjoint_path_count(ball, d.src1, d.tgt2);
    auto bwd = cayley::vertex_disjoint_path_count(ball, d.src2, d.tgt1);
    d.count_fwd = fwd.count;
    d.count_bwd = bwd.count;
    for (int v : fwd.separator) {
      d.sep_fwd.push_back(ball.keys[v]);
    }
    for (int v : bwd.separator) {
      d.sep_bwd.push_back(ball.keys[v]);
    }
    data.push_back(std::move(d));
  }

  EndVerdict verdict;
  verdict.forward = direction_evidence(ctx, opts.horizons, data, true, opts.k);
  verdict.backward =
      direction_evidence(ctx, opts.horizons, data, false, opts.k);
  const auto& f = verdict.forward;
  const auto& b = verdict.backward;
  if (f.growing && b.growing) {
    verdict.verdict = Verdict::equivalent;
  } else if (f.stagnant && b.stagnant) {
    verdict.verdict = Verdict::incomparable;
  } else if (f.growing && b.stagnant) {
    verdict.verdict = Verdict::first_below_second;
  } else if (f.stagnant && b.growing) {
    verdict.verdict = Verdict::second_below_first;
  } else {
    verdict.verdict = Verdict::unknown;
  }
  return verdict;
}

bool PosetResult::chain() const {
  const int n = static_cast<int>(classes.size());
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (auto [a, b] : below) {
    le[a][b] = true;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        le[i][j] = le[i][j] || (le[i][k] && le[k][j]);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!le[i][j] && !le[j][i]) {
        return false;
      }
    }
  }
  return true;
}

bool PosetResult::antichain() const { return below.empty(); }

int PosetResult::max_antichain() const {
  const int n = static_cast<int>(classes.size());
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (auto [a, b] : below) {
    le[a][b] = true;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        le[i][j] = le[i][j] || (le[i][k] && le[k][j]);
      }
    }
  }
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (!(mask & (1u << i))) {
        continue;
      }
      for (int j = 0; j < n && ok; ++j) {
        if (i != j && (mask & (1u << j)) && (le[i][j] || le[j][i])) {
          ok = false;
        }
      }
    }
    if (ok) {
      best = std::max(best, __builtin_popcount(mask));
    }
  }
  return best;
}

PosetResult end_poset(EndContext& ctx, const std::vector<PeriodicRay>& rays,
                      const CompareOptions& opts) {
  PosetResult poset;
  poset.rays = rays;
  const int n = static_cast<int>(rays.size());
  poset.matrix.assign(n, std::vector<Verdict>(n, Verdict::equivalent));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      EndVerdict v = end_compare(ctx, rays[i], rays[j], opts);
      poset.matrix[i][j] = v.verdict;
      switch (v.verdict) {
        case Verdict::first_below_second:
          poset.matrix[j][i] = Verdict::second_below_first;
          break;
        case Verdict::second_below_first:
          poset.matrix[j][i] = Verdict::first_below_second;
          break;
        default:
          poset.matrix[j][i] = v.verdict;
          break;
      }
      if (v.verdict == Verdict::unknown) {
        ++poset.unknown_pairs;
      }
    }
  }
  // Classes: union-find over certified equivalences.
  std::vector<int> root(n);
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (root[x] != x) {
      root[x] = root[root[x]];
      x = root[x];
    }
    return x;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (poset.matrix[i][j] == Verdict::equivalent) {
        root[find(i)] = find(j);
      }
    }
  }
  std::map<int, int> class_id;
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (!class_id.count(r)) {
      class_id[r] = static_cast<int>(poset.classes.size());
      poset.classes.emplace_back();
    }
    poset.classes[class_id[r]].push_back(i);
  }
  // Strict order between classes, from consistent strict verdicts.
  const int nc = static_cast<int>(poset.classes.size());
  for (int a = 0; a < nc; ++a) {
    for (int b = a + 1; b < nc; ++b) {
      bool a_below_b = false;
      bool b_below_a = false;
      for (int i : poset.classes[a]) {
        for (int j : poset.classes[b]) {
          // matrix[i][j] is oriented i-vs-j regardless of i<j.
          Verdict v = poset.matrix[i][j];
          if (v == Verdict::first_below_second) {
            a_below_b = true;
          } else if (v == Verdict::second_below_first) {
            b_below_a = true;
          }
        }
      }
      if (a_below_b && b_below_a) {
        ++poset.conflict_pairs;
      } else if (a_below_b) {
        poset.below.emplace_back(a, b);
      } else if (b_below_a) {
        poset.below.emplace_back(b, a);
      }
    }
  }
  std::sort(poset.below.begin(), poset.below.end());
  return poset;
}

std::string poset_to_json(EndContext& ctx, const PosetResult& poset) {
  using json = nlohmann::json;
  const auto& names = ctx.spec()->generator_alphabet();
  json doc;
  json rays = json::array();
  for (const auto& r : poset.rays) {
    rays.push_back(spec_io::format_ray_literal(
        spec_io::RayLiteral{r.base, r.prefix, r.period,
                            r.kind == RayKind::antiray},
        names));
  }
  doc["rays"] = rays;
  json matrix = json::array();
  for (const auto& row : poset.matrix) {
    json jrow = json::array();
    for (Verdict v : row) {
      jrow.push_back(verdict_name(v));
    }
    matrix.push_back(jrow);
  }
  doc["matrix"] = matrix;
  doc["classes"] = poset.classes;
  json below = json::array();
  for (auto [a, b] : poset.below) {
    below.push_back({a, b});
  }
  doc["below"] = below;
  doc["unknown_pairs"] = poset.unknown_pairs;
  doc["class_count"] = poset.classes.size();
  doc["chain"] = poset.chain();
  doc["antichain"] = poset.antichain();
  doc["max_antichain"] = poset.max_antichain();
  return doc.dump(2) + "\n";
}

std::string poset_to_text(EndContext& ctx, const PosetResult& poset) {
  const auto& names = ctx.spec()->generator_alphabet();
  std::string out;
  const int n = static_cast<int>(poset.rays.size());
  for (int i = 0; i < n; ++i) {
    const auto& r = poset.rays[i];
    out += "r" + std::to_string(i) + ": " +
           spec_io::format_ray_literal(
               spec_io::RayLiteral{r.base, r.prefix, r.period,
                                   r.kind == RayKind::antiray},
               names) +
           "\n";
  }
  out += "verdicts (rows vs columns):\n";
  auto letter = [](Verdict v) -> char {
    switch (v) {
      case Verdict::equivalent:
        return '=';
      case Verdict::first_below_second:
        return '<';
      case Verdict::second_below_first:
        return '>';
      case Verdict::incomparable:
        return 'X';
      case Verdict::unknown:
        return '?';
    }
    return '?';
  };
  for (int i = 0; i < n; ++i) {
    out += "r" + std::to_string(i) + ": ";
    for (int j = 0; j < n; ++j) {
      out += i == j ? '=' : letter(poset.matrix[i][j]);
    }
    out += "\n";
  }
  out += "classes: " + std::to_string(poset.classes.size()) + "\n";
  for (size_t c = 0; c < poset.classes.size(); ++c) {
    out += "  class " + std::to_string(c) + ": {";
    for (size_t i = 0; i < poset.classes[c].size(); ++i) {
      if (i > 0) {
        out += ",";
      }
      out += "r" + std::to_string(poset.classes[c][i]);
    }
    out += "}\n";
  }
  out += "strict order: ";
  if (poset.below.empty()) {
    out += "(none)";
  }
  for (size_t i = 0; i < poset.below.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += std::to_string(poset.below[i].first) + " < " +
           std::to_string(poset.below[i].second);
  }
  out += "\nunknown pairs: " + std::to_string(poset.unknown_pairs) + "\n";
  return out;
}

FreePairResult free_pair_witness(const models::SpecPtr& spec,
                                 const models::Element& s,
                                 const models::Element& t, int depth) {
  if (depth < 1) {
    throw Error("free_pair_witness: depth must be at least 1");
  }
  FreePairResult result;
  const auto& gens = spec->generators();
  auto right_products = [&](const Element& x) {
    std::map<std::string, words::Word> out;
    std::vector<std::pair<Element, words::Word>> frontier{{x, {}}};
    for (int len = 1; len <= depth; ++len) {
      std::vector<std::pair<Element, words::Word>> next;
      for (const auto& [e, w] : frontier) {
        for (words::Letter g = 0; g < static_cast<words::Letter>(gens.size());
             ++g) {
          Element prod = spec->multiply(e, gens[g]);
          words::Word ext = w;
          ext.push_back(g);
          std::string key = spec->format(prod);
          if (out.emplace(key, ext).second) {
            next.emplace_back(std::move(prod), std::move(ext));
          }
        }
      }
      frontier = std::move(next);
    }
    return out;
  };
  auto s_products = right_products(s);
  auto t_products = right_products(t);
  std::string best_key;
  for (const auto& [key, word] : s_products) {
    if (t_products.count(key) &&
        (best_key.empty() || models::canonical_less(key, best_key))) {
      best_key = key;
    }
  }
  if (!best_key.empty()) {
    result.kind = FreePairResult::Kind::witness;
    result.u = s_products[best_key];
    result.v = t_products[best_key];
    result.meet_key = best_key;
    return result;
  }
  // No intersection: verify all {s,t}-words of length <= depth are distinct.
  std::set<std::string> seen;
  std::vector<Element> frontier{s, t};
  bool distinct = seen.insert(spec->format(s)).second &&
                  seen.insert(spec->format(t)).second;
  result.words_checked = 2;
  for (int len = 2; len <= depth && distinct; ++len) {
    std::vector<Element> next;
    for (const auto& e : frontier) {
      for (const Element* factor : {&s, &t}) {
        Element prod = spec->multiply(e, *factor);
        ++result.words_checked;
        if (!seen.insert(spec->format(prod)).second) {
          distinct = false;
          break;
        }
        next.push_back(std::move(prod));
      }
      if (!distinct) {
        break;
      }
    }
    frontier = std::move(next);
  }
  result.kind = distinct ? FreePairResult::Kind::free_evidence
                         : FreePairResult::Kind::inconclusive;
  return result;
}

}  // namespace semiends::ends
