#include "symbreak/permgroup.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace symbreak {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (int v : image_) {
    if (v < 0 || v >= static_cast<int>(image_.size()) || seen[v])
      fail(errc::domain_error, "not a permutation");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  Permutation p;
  p.image_ = std::move(img);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.image_.resize(image_.size());
  for (int i = 0; i < size(); ++i) out.image_[image_[i]] = i;
  return out;
}

Permutation Permutation::then(const Permutation& b) const {
  Permutation out;
  out.image_.resize(image_.size());
  for (int i = 0; i < size(); ++i) out.image_[i] = b.image_[image_[i]];
  return out;
}

namespace {
int min_moved_point(const Permutation& p) {
  for (int i = 0; i < p.size(); ++i)
    if (p(i) != i) return i;
  return -1;
}
}  // namespace

PermGroup PermGroup::from_generators(int degree, std::vector<Permutation> generators) {
  PermGroup g;
  g.degree_ = degree;
  g.build(std::move(generators));
  return g;
}

void PermGroup::build(std::vector<Permutation> gens) {
  // drop identities and duplicates
  std::set<Permutation> unique_gens;
  for (auto& p : gens)
    if (!p.is_identity()) unique_gens.insert(p);
  generators_.assign(unique_gens.begin(), unique_gens.end());

  struct ChainLevel {
    int base;
    std::vector<Permutation> gens;           // stabilize all earlier bases
    std::map<int, Permutation> transversal;  // orbit point -> perm mapping base to it
  };
  std::vector<ChainLevel> chain;

  auto recompute_orbit = [&](ChainLevel& lvl) {
    lvl.transversal.clear();
    lvl.transversal.emplace(lvl.base, Permutation::identity(degree_));
    std::vector<int> queue{lvl.base};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int p = queue[qi];
      for (const auto& s : lvl.gens) {
        int q = s(p);
        if (!lvl.transversal.count(q)) {
          lvl.transversal.emplace(q, lvl.transversal.at(p).then(s));
          queue.push_back(q);
        }
      }
    }
  };

  auto strip = [&](Permutation g, size_t from) -> std::pair<Permutation, size_t> {
    for (size_t k = from; k < chain.size(); ++k) {
      int img = g(chain[k].base);
      auto it = chain[k].transversal.find(img);
      if (it == chain[k].transversal.end()) return {std::move(g), k};
      g = g.then(it->second.inverse());
    }
    return {std::move(g), chain.size()};
  };

  auto ensure_level = [&](const Permutation& h) {
    ChainLevel lvl;
    lvl.base = min_moved_point(h);
    chain.push_back(std::move(lvl));
  };

  // verify_level(i): every Schreier generator of level i must strip to the
  // identity through the deeper chain; non-trivial residues become new strong
  // generators (Schreier-Sims).
  auto verify_level = [&](auto&& self, size_t i) -> void {
    std::vector<int> orbit_points;
    for (const auto& [p, t] : chain[i].transversal) orbit_points.push_back(p);
    for (size_t gi = 0; gi < chain[i].gens.size(); ++gi) {
      for (int beta : orbit_points) {
        const Permutation& x = chain[i].gens[gi];
        const Permutation& u_beta = chain[i].transversal.at(beta);
        const Permutation& u_img = chain[i].transversal.at(x(beta));
        Permutation schreier = u_beta.then(x).then(u_img.inverse());
        auto [h, j] = strip(std::move(schreier), i + 1);
        if (h.is_identity()) continue;
        if (j == chain.size()) ensure_level(h);
        for (size_t l = i + 1; l <= j; ++l) {
          chain[l].gens.push_back(h);
          recompute_orbit(chain[l]);
        }
        for (size_t l = j; l > i; --l) self(self, l);
      }
    }
  };

  for (const auto& g : generators_) {
    auto [h, j] = strip(g, 0);
    if (h.is_identity()) continue;
    if (j == chain.size()) ensure_level(h);
    for (size_t l = 0; l <= j; ++l) {
      if (l == chain.size()) break;
      chain[l].gens.push_back(h);
      recompute_orbit(chain[l]);
    }
  }
  for (size_t i = chain.size(); i-- > 0;) verify_level(verify_level, i);

  order_ = 1;
  levels_.clear();
  for (auto& lvl : chain) {
    Level out;
    out.base = lvl.base;
    // base first so that the all-zero odometer index is the identity
    out.orbit.push_back(lvl.base);
    out.transversal.push_back(Permutation::identity(degree_));
    for (const auto& [p, t] : lvl.transversal) {
      if (p == lvl.base) continue;
      out.orbit.push_back(p);
      out.transversal.push_back(t);
    }
    order_ *= out.orbit.size();
    levels_.push_back(std::move(out));
  }
}

std::vector<Permutation> PermGroup::enumerate(uint64_t cap) const {
  if (order_ > cap)
    fail(errc::enumeration_cap_exceeded,
         "group order " + std::to_string(order_) + " above enumeration cap " + std::to_string(cap));
  std::vector<Permutation> out;
  out.reserve(order_);
  size_t depth = levels_.size();
  if (depth == 0) return {Permutation::identity(degree_)};

  std::vector<size_t> idx(depth, 0);
  // prefix[k] = transversal[0..k] composed, deepest applied first
  std::vector<Permutation> prefix(depth);
  auto recompute_from = [&](size_t k) {
    for (size_t l = k; l < depth; ++l) {
      const Permutation& t = levels_[l].transversal[idx[l]];
      prefix[l] = (l == 0) ? t : t.then(prefix[l - 1]);
    }
  };
  recompute_from(0);
  while (true) {
    out.push_back(prefix[depth - 1]);
    size_t k = depth;
    while (k > 0 && idx[k - 1] + 1 == levels_[k - 1].orbit.size()) {
      idx[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
    ++idx[k - 1];
    recompute_from(k - 1);
  }
  return out;
}

bool PermGroup::contains(const Permutation& p) const {
  Permutation g = p;
  for (const auto& lvl : levels_) {
    int img = g(lvl.base);
    auto it = std::find(lvl.orbit.begin(), lvl.orbit.end(), img);
    if (it == lvl.orbit.end()) return false;
    g = g.then(lvl.transversal[it - lvl.orbit.begin()].inverse());
  }
  return g.is_identity();
}

}  // namespace symbreak
