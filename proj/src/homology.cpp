#include "ichom/homology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ichom::homology {

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not compose");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  }
  return c;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

}  // namespace

std::vector<Integer> invariant_factors(IntMatrix m) {
  std::vector<Integer> diag;
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block becomes the pivot
      bool found = false;
      std::size_t pr = t, pc = t;
      for (std::size_t i = t; i < m.rows(); ++i) {
        for (std::size_t j = t; j < m.cols(); ++j) {
          if (m.at(i, j) != 0 && (!found || abs(m.at(i, j)) < abs(m.at(pr, pc)))) {
            found = true;
            pr = i;
            pc = j;
          }
        }
      }
      if (!found) return diag;
      swap_rows(m, t, pr);
      swap_cols(m, t, pc);
      const Integer p = m.at(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (m.at(i, t) == 0) continue;
        Integer q = m.at(i, t) / p;
        for (std::size_t j = t; j < m.cols(); ++j) m.at(i, j) -= q * m.at(t, j);
        if (m.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (m.at(t, j) == 0) continue;
        Integer q = m.at(t, j) / p;
        for (std::size_t i = t; i < m.rows(); ++i) m.at(i, j) -= q * m.at(i, t);
        if (m.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // the pivot must divide the rest of the block
      bool divides = true;
      for (std::size_t i = t + 1; i < m.rows() && divides; ++i) {
        for (std::size_t j = t + 1; j < m.cols(); ++j) {
          if (m.at(i, j) % p != 0) {
            for (std::size_t k = t; k < m.cols(); ++k) m.at(t, k) += m.at(i, k);
            divides = false;
            break;
          }
        }
      }
      if (!divides) continue;
      diag.push_back(abs(p));
      break;
    }
  }
  return diag;
}

void ChainComplex::validate() const {
  if (boundary.size() + 1 != sizes.size() && !(sizes.empty() && boundary.empty())) {
    throw std::invalid_argument("chain complex needs one boundary matrix per positive degree");
  }
  for (std::size_t k = 0; k < boundary.size(); ++k) {
    if (boundary[k].rows() != sizes[k] || boundary[k].cols() != sizes[k + 1]) {
      throw std::invalid_argument("boundary matrix in degree " + std::to_string(k + 1) + " has shape " +
                                  std::to_string(boundary[k].rows()) + "x" + std::to_string(boundary[k].cols()) +
                                  ", expected " + std::to_string(sizes[k]) + "x" + std::to_string(sizes[k + 1]));
    }
  }
  for (std::size_t k = 0; k + 1 < boundary.size(); ++k) {
    if (!(boundary[k] * boundary[k + 1]).is_zero()) {
      throw std::invalid_argument("boundary of boundary is nonzero in degree " + std::to_string(k + 2));
    }
  }
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<int>>& facets) {
  std::vector<std::set<std::vector<int>>> by_dim;
  for (auto f : facets) {
    if (f.empty()) throw std::invalid_argument("empty facet");
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw std::invalid_argument("facet repeats a vertex");
    if (f.front() < 0) throw std::invalid_argument("negative vertex index");
    if (f.size() > 20) throw std::invalid_argument("facet dimension too large");
    const std::size_t n = f.size();
    if (by_dim.size() < n) by_dim.resize(n);
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
      std::vector<int> face;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1ul << i)) face.push_back(f[i]);
      }
      by_dim[face.size() - 1].insert(face);
    }
  }
  SimplicialComplex sc;
  for (const auto& s : by_dim) sc.simplices.emplace_back(s.begin(), s.end());
  return sc;
}

ChainComplex SimplicialComplex::chain_complex() const {
  ChainComplex cc;
  for (const auto& s : simplices) cc.sizes.push_back(s.size());
  for (std::size_t k = 1; k < simplices.size(); ++k) {
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < simplices[k - 1].size(); ++i) index[simplices[k - 1][i]] = i;
    IntMatrix d(simplices[k - 1].size(), simplices[k].size());
    for (std::size_t j = 0; j < simplices[k].size(); ++j) {
      const auto& s = simplices[k][j];
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<int> f(s);
        f.erase(f.begin() + static_cast<long>(i));
        d.at(index.at(f), j) += i % 2 == 0 ? 1 : -1;
      }
    }
    cc.boundary.push_back(std::move(d));
  }
  return cc;
}

std::string HomologyGroup::to_string() const {
  std::ostringstream os;
  bool any = false;
  if (betti > 0) {
    os << "Z";
    if (betti > 1) os << '^' << betti;
    any = true;
  }
  for (const auto& t : torsion) {
    if (any) os << " + ";
    os << "Z/" << t.get_str();
    any = true;
  }
  if (!any) os << '0';
  return os.str();
}

std::vector<HomologyGroup> homology(const ChainComplex& complex) {
  complex.validate();
  const std::size_t top = complex.sizes.size();
  std::vector<std::vector<Integer>> factors(top + 1);  // factors[k] of boundary C_k -> C_{k-1}
  for (std::size_t k = 1; k < top; ++k) factors[k] = invariant_factors(complex.boundary[k - 1]);
  std::vector<HomologyGroup> out;
  for (std::size_t k = 0; k < top; ++k) {
    HomologyGroup g;
    g.degree = static_cast<int>(k);
    const long long rank_out = static_cast<long long>(factors[k].size());
    const long long rank_in = static_cast<long long>(factors[k + 1].size());
    g.betti = static_cast<long long>(complex.sizes[k]) - rank_out - rank_in;
    for (const auto& d : factors[k + 1]) {
      if (d > 1) g.torsion.push_back(d);
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace ichom::homology
