#include "wdist/groebner.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <utility>

#include "wdist/errors.hpp"

namespace wdist {

BivarPoly BivarPoly::term(const Rat& c, unsigned da, unsigned db) {
  BivarPoly p;
  if (c != 0) p.t_[{da, db}] = c;
  return p;
}

Rat BivarPoly::coeff(unsigned da, unsigned db) const {
  const auto it = t_.find({da, db});
  return it == t_.end() ? Rat(0) : it->second;
}

long BivarPoly::degree_a() const {
  long d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, static_cast<long>(m.da));
  return d;
}

long BivarPoly::degree_b() const {
  long d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, static_cast<long>(m.db));
  return d;
}

Mono BivarPoly::lead_mono() const {
  if (t_.empty()) raise(Errc::IDENTICALLY_ZERO, "lead monomial of zero polynomial");
  return t_.rbegin()->first;
}

Rat BivarPoly::lead_coeff() const {
  if (t_.empty()) raise(Errc::IDENTICALLY_ZERO, "lead coefficient of zero polynomial");
  return t_.rbegin()->second;
}

BivarPoly BivarPoly::monic() const {
  const Rat lc = lead_coeff();
  BivarPoly out;
  for (const auto& [m, c] : t_) out.t_[m] = c / lc;
  return out;
}

void BivarPoly::add_scaled(const Rat& c, const Mono& shift, const BivarPoly& q) {
  for (const auto& [m, qc] : q.t_) {
    const Mono key{m.da + shift.da, m.db + shift.db};
    Rat& slot = t_[key];
    slot += c * qc;
    if (slot == 0) t_.erase(key);
  }
}

void BivarPoly::strip() {
  for (auto it = t_.begin(); it != t_.end();)
    it = (it->second == 0) ? t_.erase(it) : std::next(it);
}

std::string BivarPoly::str(const std::string& avar, const std::string& bvar) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const Rat& c = it->second;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const Rat ac = abs(c);
    const bool unit = ac == 1 && (it->first.da || it->first.db);
    if (!unit) os << rat_str(ac);
    bool star = !unit;
    if (it->first.da) {
      if (star) os << "*";
      os << avar;
      if (it->first.da > 1) os << "^" << it->first.da;
      star = true;
    }
    if (it->first.db) {
      if (star) os << "*";
      os << bvar;
      if (it->first.db > 1) os << "^" << it->first.db;
    }
  }
  return os.str();
}

BivarPoly operator+(const BivarPoly& x, const BivarPoly& y) {
  BivarPoly out = x;
  out.add_scaled(Rat(1), {0, 0}, y);
  return out;
}

BivarPoly operator-(const BivarPoly& x, const BivarPoly& y) {
  BivarPoly out = x;
  out.add_scaled(Rat(-1), {0, 0}, y);
  return out;
}

BivarPoly operator*(const BivarPoly& x, const BivarPoly& y) {
  BivarPoly out;
  for (const auto& [m, c] : x.terms()) out.add_scaled(c, m, y);
  return out;
}

BivarPoly operator*(const Rat& s, const BivarPoly& x) {
  BivarPoly out;
  if (s == 0) return out;
  out.add_scaled(s, {0, 0}, x);
  return out;
}

BivarPoly normal_form(BivarPoly p, const std::vector<BivarPoly>& g) {
  BivarPoly rem;
  while (!p.is_zero()) {
    const Mono lm = p.lead_mono();
    const Rat lc = p.lead_coeff();
    bool reduced = false;
    for (const BivarPoly& gi : g) {
      if (gi.is_zero()) continue;
      const Mono gm = gi.lead_mono();
      if (!gm.divides(lm)) continue;
      const Mono shift{lm.da - gm.da, lm.db - gm.db};
      p.add_scaled(-lc / gi.lead_coeff(), shift, gi);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.add_scaled(lc, {0, 0}, BivarPoly::term(Rat(1), lm.da, lm.db));
      p.add_scaled(-lc, {0, 0}, BivarPoly::term(Rat(1), lm.da, lm.db));
    }
  }
  return rem;
}

namespace {

Mono mono_lcm(const Mono& x, const Mono& y) {
  return {std::max(x.da, y.da), std::max(x.db, y.db)};
}

BivarPoly s_poly(const BivarPoly& f, const BivarPoly& g) {
  const Mono fm = f.lead_mono(), gm = g.lead_mono();
  const Mono l = mono_lcm(fm, gm);
  BivarPoly s;
  s.add_scaled(Rat(1) / f.lead_coeff(), {l.da - fm.da, l.db - fm.db}, f);
  s.add_scaled(Rat(-1) / g.lead_coeff(), {l.da - gm.da, l.db - gm.db}, g);
  return s;
}

}  // namespace

std::vector<BivarPoly> groebner_basis(std::vector<BivarPoly> gens) {
  std::vector<BivarPoly> g;
  for (auto& p : gens)
    if (!p.is_zero()) g.push_back(p.monic());
  if (g.empty()) return g;

  std::deque<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j) pairs.emplace_back(i, j);

  size_t steps = 0;
  while (!pairs.empty()) {
    ensure(++steps < 100000, "basis computation did not terminate");
    const auto [i, j] = pairs.front();
    pairs.pop_front();
    const Mono mi = g[i].lead_mono(), mj = g[j].lead_mono();
    // Coprime leads produce an S-polynomial that reduces to zero.
    if (mi.da + mj.da == mono_lcm(mi, mj).da && mi.db + mj.db == mono_lcm(mi, mj).db)
      continue;
    const BivarPoly nf = normal_form(s_poly(g[i], g[j]), g);
    if (nf.is_zero()) continue;
    g.push_back(nf.monic());
    for (size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }

  // Interreduce to the unique reduced basis.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < g.size(); ++i) {
      std::vector<BivarPoly> rest;
      for (size_t k = 0; k < g.size(); ++k)
        if (k != i && !g[k].is_zero()) rest.push_back(g[k]);
      const BivarPoly nf = normal_form(g[i], rest);
      if (!(nf == g[i])) changed = true;
      g[i] = nf.is_zero() ? nf : nf.monic();
    }
    g.erase(std::remove_if(g.begin(), g.end(),
                           [](const BivarPoly& p) { return p.is_zero(); }),
            g.end());
  }
  std::sort(g.begin(), g.end(), [](const BivarPoly& x, const BivarPoly& y) {
    return MonoLess()(x.lead_mono(), y.lead_mono());
  });
  return g;
}

std::vector<Mono> quotient_basis(const std::vector<BivarPoly>& gb) {
  long amax = -1, bmax = -1;
  std::vector<Mono> leads;
  for (const BivarPoly& p : gb) {
    const Mono m = p.lead_mono();
    leads.push_back(m);
    if (m.db == 0) amax = amax < 0 ? m.da : std::min<long>(amax, m.da);
    if (m.da == 0) bmax = bmax < 0 ? m.db : std::min<long>(bmax, m.db);
  }
  if (amax < 0 || bmax < 0)
    raise(Errc::ELIMINATION_DEGENERATE,
          "quotient ring is not finite-dimensional at this node");
  std::vector<Mono> basis;
  for (unsigned da = 0; da < static_cast<unsigned>(amax); ++da)
    for (unsigned db = 0; db < static_cast<unsigned>(bmax); ++db) {
      const Mono m{da, db};
      bool under = true;
      for (const Mono& l : leads)
        if (l.divides(m)) {
          under = false;
          break;
        }
      if (under) basis.push_back(m);
    }
  std::sort(basis.begin(), basis.end(),
            [](const Mono& x, const Mono& y) { return MonoLess()(x, y); });
  return basis;
}

RatMat multiplication_matrix(const BivarPoly& f, const std::vector<BivarPoly>& gb,
                             const std::vector<Mono>& basis) {
  std::map<Mono, size_t, MonoLess> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  RatMat m(basis.size(), std::vector<Rat>(basis.size(), Rat(0)));
  for (size_t j = 0; j < basis.size(); ++j) {
    BivarPoly shifted;
    shifted.add_scaled(Rat(1), basis[j], f);
    const BivarPoly nf = normal_form(shifted, gb);
    for (const auto& [mono, c] : nf.terms()) {
      const auto it = index.find(mono);
      ensure(it != index.end(), "normal form escaped the residue basis");
      m[it->second][j] = c;
    }
  }
  return m;
}

}  // namespace wdist
