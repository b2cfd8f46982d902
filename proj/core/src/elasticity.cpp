#include "m3k/elasticity.hpp"

#include <mutex>
#include <stdexcept>

#include "m3k/connectivity.hpp"
#include "m3k/iso.hpp"

namespace m3k {

int MinorClassSet::find(const Matroid& n) const {
  const std::uint64_t fp = iso_fingerprint(n);
  auto it = by_fp.find(fp);
  if (it == by_fp.end()) return -1;
  for (int idx : it->second) {
    const Matroid& rep = classes[idx].rep;
    if (rep == n || is_isomorphic(rep, n)) return idx;
  }
  return -1;
}

MinorClassSet minor_classes(const Matroid& m) {
  MinorClassSet out;
  const Mask e = m.ground();
  for (Mask c = 0;; ++c) {
    if (m.rank(c) == count(c)) {
      const Mask rest = e & ~c;
      Mask d = rest;
      while (true) {
        Matroid mi = minor(m, c, d).first;
        const std::uint64_t fp = iso_fingerprint(mi);
        auto& bucket = out.by_fp[fp];
        bool known = false;
        for (int idx : bucket) {
          const Matroid& rep = out.classes[idx].rep;
          if (rep == mi || is_isomorphic(rep, mi)) {
            known = true;
            break;
          }
        }
        if (!known) {
          MinorClassSet::Entry entry;
          entry.fp = fp;
          entry.three_connected = is_n_connected(mi, 3);
          entry.rep = std::move(mi);
          bucket.push_back(static_cast<int>(out.classes.size()));
          out.classes.push_back(std::move(entry));
        }
        if (d == 0) break;
        d = (d - 1) & rest;
      }
    }
    if (c == e) break;
  }
  return out;
}

std::vector<std::vector<MinorWitness>> witnesses_by_class(const Matroid& m,
                                                          const MinorClassSet& cls) {
  std::vector<std::vector<MinorWitness>> out(cls.classes.size());
  const Mask e = m.ground();
  // every disjoint (C, D) pair, dependent contractions included
  for (Mask c = 0;; ++c) {
    const Mask rest = e & ~c;
    Mask d = rest;
    while (true) {
      Matroid mi = minor(m, c, d).first;
      const int idx = cls.find(mi);
      if (idx >= 0) out[idx].push_back({c, d, e & ~c & ~d});
      if (d == 0) break;
      d = (d - 1) & rest;
    }
    if (c == e) break;
  }
  return out;
}

namespace {

std::mutex g_minor_mutex;
std::unordered_map<std::string, bool> g_minor_memo;

}  // namespace

bool has_minor(const Matroid& m, const Matroid& n) {
  if (n.size() > m.size() || n.rank() > m.rank() || n.corank() > m.corank()) return false;
  if (n.size() == m.size()) return is_isomorphic(m, n);
  const std::string key = m.table_key() + n.table_key();
  {
    std::lock_guard<std::mutex> lk(g_minor_mutex);
    auto it = g_minor_memo.find(key);
    if (it != g_minor_memo.end()) return it->second;
  }
  const std::uint64_t want = iso_fingerprint(n);
  const Mask e = m.ground();
  const int drop = m.size() - n.size();
  bool found = false;
  for (Mask c = 0; !found; ++c) {
    if (count(c) <= drop && m.rank(c) == count(c) && m.rank() - count(c) >= n.rank()) {
      const Mask rest = e & ~c;
      const int dsize = drop - count(c);
      Mask d = rest;
      while (true) {
        if (count(d) == dsize) {
          Matroid mi = minor(m, c, d).first;
          if (mi.rank() == n.rank() && iso_fingerprint(mi) == want && is_isomorphic(mi, n)) {
            found = true;
            break;
          }
        }
        if (d == 0) break;
        d = (d - 1) & rest;
      }
    }
    if (c == e) break;
  }
  {
    std::lock_guard<std::mutex> lk(g_minor_mutex);
    g_minor_memo.emplace(key, found);
  }
  return found;
}

std::vector<MinorWitness> minor_witnesses(const Matroid& m, const Matroid& n) {
  std::vector<MinorWitness> out;
  if (n.size() > m.size()) return out;
  const std::uint64_t want = iso_fingerprint(n);
  const Mask e = m.ground();
  const int drop = m.size() - n.size();
  for (Mask c = 0;; ++c) {
    if (count(c) <= drop) {
      const Mask rest = e & ~c;
      Mask d = rest;
      while (true) {
        if (count(d) == drop - count(c)) {
          Matroid mi = minor(m, c, d).first;
          if (iso_fingerprint(mi) == want && is_isomorphic(mi, n))
            out.push_back({c, d, e & ~c & ~d});
        }
        if (d == 0) break;
        d = (d - 1) & rest;
      }
    }
    if (c == e) break;
  }
  return out;
}

SiCoPair sico(const Matroid& m, int e) {
  if (e < 0 || e >= m.size()) throw std::invalid_argument("sico: element out of range");
  SiCoPair out{simplify(minor(m, bit(e), 0).first).first,
               cosimplify(minor(m, 0, bit(e)).first).first, false, false};
  out.si_3connected = is_n_connected(out.si_contract, 3);
  out.co_3connected = is_n_connected(out.co_delete, 3);
  return out;
}

bool is_elastic(const Matroid& m, int e) {
  const SiCoPair p = sico(m, e);
  return p.si_3connected && p.co_3connected;
}

Mask elastic_elements(const Matroid& m) {
  if (!is_n_connected(m, 3))
    throw std::invalid_argument("elastic_elements: matroid is not 3-connected");
  Mask out = 0;
  for (int e = 0; e < m.size(); ++e)
    if (is_elastic(m, e)) out |= bit(e);
  return out;
}

ElasticityReport elasticity_report(const Matroid& m, const Matroid& n) {
  if (!is_n_connected(m, 3))
    throw std::invalid_argument("elasticity_report: matroid is not 3-connected");
  ElasticityReport rep;
  rep.detail.resize(m.size());
  for (int e = 0; e < m.size(); ++e) {
    const SiCoPair p = sico(m, e);
    auto& d = rep.detail[e];
    d.si_3conn = p.si_3connected;
    d.co_3conn = p.co_3connected;
    d.si_has_minor = has_minor(p.si_contract, n);
    d.co_has_minor = has_minor(p.co_delete, n);
    if (d.si_3conn && d.co_3conn) {
      rep.elastic |= bit(e);
      if (d.si_has_minor && d.co_has_minor) rep.n_elastic |= bit(e);
    }
    if ((d.si_has_minor && !d.si_3conn) || (d.co_has_minor && !d.co_3conn))
      rep.n_revealing |= bit(e);
  }
  return rep;
}

Mask n_elastic_elements(const Matroid& m, const Matroid& n) {
  return elasticity_report(m, n).n_elastic;
}

Mask n_revealing_elements(const Matroid& m, const Matroid& n) {
  return elasticity_report(m, n).n_revealing;
}

bool reveals(const Matroid& m, const ThetaSeparator& sep, const Matroid& n) {
  const bool primal = sep.orientation == ThetaSeparator::Orientation::primal;
  const Matroid host = primal ? m : dual(m);
  const Matroid target = primal ? n : dual(n);
  Mask z = sep.z;
  while (z) {
    const int e = lowest(z);
    z &= z - 1;
    const SiCoPair p = sico(host, e);
    if ((has_minor(p.si_contract, target) && !p.si_3connected) ||
        (has_minor(p.co_delete, target) && !p.co_3connected))
      return true;
  }
  return false;
}

}  // namespace m3k
