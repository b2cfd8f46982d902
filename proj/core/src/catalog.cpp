#include "m3k/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "m3k/constructions.hpp"
#include "m3k/iso.hpp"

namespace m3k {

namespace {

std::vector<Mask> format_subsets(int n, int r, LineFormat fmt) {
  return fmt == LineFormat::lex01 ? k_subsets_lex(n, r) : k_subsets_colex(n, r);
}

}  // namespace

std::string encode_line(const Matroid& m, LineFormat fmt) {
  const int n = m.size(), r = m.rank();
  std::ostringstream os;
  os << n << ' ' << r << ' ';
  const char yes = fmt == LineFormat::lex01 ? '1' : '*';
  for (Mask s : format_subsets(n, r, fmt)) os << (m.rank(s) == r ? yes : '0');
  return os.str();
}

Matroid decode_line(const std::string& line, LineFormat fmt) {
  std::istringstream is(line);
  int n = -1, r = -1;
  std::string bits;
  if (!(is >> n >> r >> bits)) throw std::invalid_argument("malformed catalog line");
  std::string extra;
  if (is >> extra) throw std::invalid_argument("trailing data on catalog line");
  if (n < 0 || n > kMaxElements || r < 0 || r > n)
    throw std::invalid_argument("bad n/r on catalog line");
  const auto subsets = format_subsets(n, r, fmt);
  if (bits.size() != subsets.size())
    throw std::invalid_argument("bitstring length " + std::to_string(bits.size()) +
                                ", expected " + std::to_string(subsets.size()));
  const char yes = fmt == LineFormat::lex01 ? '1' : '*';
  std::vector<Mask> basis_list;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == yes)
      basis_list.push_back(subsets[i]);
    else if (bits[i] != '0')
      throw std::invalid_argument(std::string("illegal character '") + bits[i] +
                                  "' in bitstring");
  }
  if (basis_list.empty()) throw std::invalid_argument("no basis marked on catalog line");
  return from_bases(n, basis_list);
}

namespace {

struct Dedup {
  std::unordered_map<std::uint64_t, std::vector<int>> by_fp;
  // Returns true if the matroid was new and appended.
  bool add(Catalog& cat, Matroid m, std::string id, std::string source) {
    const std::uint64_t fp = iso_fingerprint(m);
    auto& bucket = by_fp[fp];
    for (int idx : bucket)
      if (is_isomorphic(cat.entries[idx].m, m)) return false;
    bucket.push_back(static_cast<int>(cat.entries.size()));
    cat.entries.push_back({std::move(m), std::move(id), std::move(source)});
    return true;
  }
};

}  // namespace

Catalog load_catalog(const std::string& path, LineFormat fmt) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open catalog file: " + path);
  Catalog cat;
  cat.spec = path;
  Dedup dd;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    if (trimmed.empty() || trimmed[0] == '#') continue;
    Matroid m;
    try {
      m = decode_line(trimmed, fmt);
    } catch (const std::exception& ex) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " + ex.what());
    }
    const std::string id = path + ":" + std::to_string(lineno);
    dd.add(cat, std::move(m), id, id);
  }
  return cat;
}

namespace {

// Projective points over GF(p)^r: nonzero vectors, first nonzero entry 1.
std::vector<std::vector<int>> projective_points(int p, int r) {
  std::vector<std::vector<int>> pts;
  std::vector<int> v(r, 0);
  while (true) {
    int i = r - 1;
    while (i >= 0 && v[i] == p - 1) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
    int first = 0;
    while (first < r && v[first] == 0) ++first;
    if (first < r && v[first] == 1) pts.push_back(v);
  }
  return pts;
}

int gf_rank(int p, const std::vector<const std::vector<int>*>& cols, int r) {
  std::vector<std::vector<int>> w;
  w.reserve(cols.size());
  for (auto* c : cols) w.push_back(*c);
  int rank = 0;
  for (int row = 0; row < r && rank < static_cast<int>(w.size()); ++row) {
    int pivot = -1;
    for (int k = rank; k < static_cast<int>(w.size()); ++k)
      if (w[k][row] != 0) {
        pivot = k;
        break;
      }
    if (pivot < 0) continue;
    std::swap(w[rank], w[pivot]);
    int inv = 1;
    for (int t = 1; t < p; ++t)
      if (w[rank][row] * t % p == 1) inv = t;
    for (int i = row; i < r; ++i) w[rank][i] = w[rank][i] * inv % p;
    for (int k = 0; k < static_cast<int>(w.size()); ++k) {
      if (k == rank || w[k][row] == 0) continue;
      const int f = w[k][row];
      for (int i = row; i < r; ++i) w[k][i] = ((w[k][i] - f * w[rank][i]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

Matroid matroid_from_points(int p, int r, const std::vector<std::vector<int>>& pts,
                            const std::vector<int>& chosen) {
  const int n = static_cast<int>(chosen.size());
  std::vector<std::uint8_t> tbl(std::size_t{1} << n, 0);
  const Mask e = full_mask(n);
  std::vector<const std::vector<int>*> cols;
  for (Mask x = 0;; ++x) {
    cols.clear();
    for (int i = 0; i < n; ++i)
      if (has_bit(x, i)) cols.push_back(&pts[chosen[i]]);
    tbl[x] = static_cast<std::uint8_t>(gf_rank(p, cols, r));
    if (x == e) break;
  }
  return Matroid::from_rank_table(n, std::move(tbl));
}

// Point index permutations induced by permuting the r coordinates; used to
// kill most equivalent extension sets before the isomorphism dedup.
std::vector<std::vector<int>> coordinate_point_perms(int p, int r,
                                                     const std::vector<std::vector<int>>& pts) {
  std::unordered_map<std::string, int> index;
  auto key = [](const std::vector<int>& v) {
    std::string s;
    for (int x : v) s.push_back(static_cast<char>('0' + x));
    return s;
  };
  for (std::size_t i = 0; i < pts.size(); ++i) index[key(pts[i])] = static_cast<int>(i);
  std::vector<int> coord(r);
  std::iota(coord.begin(), coord.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    std::vector<int> pp(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::vector<int> img(r);
      for (int j = 0; j < r; ++j) img[coord[j]] = pts[i][j];
      // renormalise so the first nonzero entry is 1
      int first = 0;
      while (first < r && img[first] == 0) ++first;
      const int lead = img[first];
      int inv = 1;
      for (int t = 1; t < p; ++t)
        if (lead * t % p == 1) inv = t;
      for (int j = 0; j < r; ++j) img[j] = img[j] * inv % p;
      pp[i] = index.at(key(img));
    }
    perms.push_back(std::move(pp));
  } while (std::next_permutation(coord.begin(), coord.end()));
  return perms;
}

void add_constructions(Catalog& cat, Dedup& dd, int max_n) {
  for (int n = 0; n <= max_n; ++n)
    for (int r = 0; r <= n; ++r)
      dd.add(cat, uniform(r, n), "uniform(" + std::to_string(r) + "," + std::to_string(n) + ")",
             "construction");
  for (int r = 2; 2 * r <= max_n; ++r) {
    dd.add(cat, wheel(r), "wheel(" + std::to_string(r) + ")", "construction");
    dd.add(cat, whirl(r), "whirl(" + std::to_string(r) + ")", "construction");
  }
  for (int n = 2; 2 * n <= max_n; ++n)
    dd.add(cat, theta(n).first, "theta(" + std::to_string(n) + ")", "construction");
  for (int n = 2; 2 * n - 1 <= max_n; ++n)
    dd.add(cat, theta_minus(n).first, "thetaminus(" + std::to_string(n) + ")", "construction");
  if (max_n >= 7) dd.add(cat, fano(), "fano", "construction");
  if (max_n >= 8) dd.add(cat, l8(), "l8", "construction");
}

}  // namespace

Catalog gen_catalog(int p, int max_n) {
  if (p != 2 && p != 3) throw std::invalid_argument("gen_catalog: p must be 2 or 3");
  if (max_n < 0 || max_n > 10) throw std::invalid_argument("gen_catalog: max_n must be <= 10");
  Catalog cat;
  cat.spec = "gen:gf" + std::to_string(p) + ":" + std::to_string(max_n);
  Dedup dd;
  add_constructions(cat, dd, max_n);
  const std::string tag = "gf" + std::to_string(p);
  int counter = 0;
  for (int r = 0; r <= max_n; ++r) {
    const auto pts = projective_points(p, r);
    // standard basis points come first in lex vector order? locate them
    std::vector<int> basis_idx;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (std::accumulate(pts[i].begin(), pts[i].end(), 0) == 1)
        basis_idx.push_back(static_cast<int>(i));
    std::vector<int> extras;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (std::find(basis_idx.begin(), basis_idx.end(), static_cast<int>(i)) ==
          basis_idx.end())
        extras.push_back(static_cast<int>(i));
    const auto perms = r >= 2 ? coordinate_point_perms(p, r, pts)
                              : std::vector<std::vector<int>>{};
    for (int n = r; n <= max_n; ++n) {
      const int extra = n - r;
      if (extra > static_cast<int>(extras.size())) break;
      // choose `extra` additional points, orbit-filtered by coordinate perms
      auto process = [&](const std::vector<int>& chosen_extras) {
        if (!perms.empty()) {
          std::vector<int> img(chosen_extras.size());
          for (const auto& pp : perms) {
            for (std::size_t i = 0; i < chosen_extras.size(); ++i)
              img[i] = pp[chosen_extras[i]];
            std::sort(img.begin(), img.end());
            if (std::lexicographical_compare(img.begin(), img.end(), chosen_extras.begin(),
                                             chosen_extras.end()))
              return;  // not the orbit representative
          }
        }
        std::vector<int> chosen = basis_idx;
        chosen.insert(chosen.end(), chosen_extras.begin(), chosen_extras.end());
        Matroid m = matroid_from_points(p, r, pts, chosen);
        if (dd.add(cat, std::move(m), tag + ":" + std::to_string(counter), tag))
          ++counter;
      };
      // iterate ascending index combinations of `extras`
      std::vector<int> comb(extra);
      std::iota(comb.begin(), comb.end(), 0);
      if (extra == 0) {
        process({});
        continue;
      }
      const int ne = static_cast<int>(extras.size());
      while (true) {
        std::vector<int> chosen_extras(extra);
        for (int i = 0; i < extra; ++i) chosen_extras[i] = extras[comb[i]];
        process(chosen_extras);
        int i = extra - 1;
        while (i >= 0 && comb[i] == ne - extra + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < extra; ++j) comb[j] = comb[j - 1] + 1;
      }
    }
  }
  return cat;
}

Catalog load_catalog_spec(const std::string& spec, int max_n_filter) {
  Catalog out;
  out.spec = spec;
  Dedup dd;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    Catalog piece;
    if (part.rfind("gen:gf", 0) == 0) {
      const auto second = part.find(':', 4);
      if (second == std::string::npos)
        throw std::invalid_argument("bad catalog spec: " + part);
      const int p = std::stoi(part.substr(6, second - 6));
      const int k = std::stoi(part.substr(second + 1));
      piece = gen_catalog(p, k);
    } else {
      // autodetect the line format from the first data line
      std::ifstream in(part);
      if (!in) throw std::invalid_argument("cannot open catalog file: " + part);
      LineFormat fmt = LineFormat::lex01;
      std::string line;
      while (std::getline(in, line)) {
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        if (line.find('*') != std::string::npos) fmt = LineFormat::revlex_star;
        break;
      }
      piece = load_catalog(part, fmt);
    }
    for (auto& entry : piece.entries) {
      if (max_n_filter > 0 && entry.m.size() > max_n_filter) continue;
      dd.add(out, std::move(entry.m), entry.id, entry.source);
    }
  }
  return out;
}

}  // namespace m3k
