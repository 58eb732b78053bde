#include "mates/primitive.hpp"

#include <algorithm>

#include "common/error.hpp"
#include "exact/factor.hpp"
#include "exact/linalg.hpp"
#include "mates/lattice.hpp"
#include "spectral/spectral.hpp"

namespace skewspec::mates {

namespace {

Integer mod(const Integer& x, const Integer& p) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  return r;
}

Integer inverse_mod(const Integer& x, const Integer& p) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()) == 0) {
    throw Error(ErrorKind::Argument, "value not invertible mod " + p.get_str());
  }
  return r;
}

void require_odd_prime(const Integer& p) {
  if (p < 3 || !exact::is_prime(p)) {
    throw Error(ErrorKind::Argument, p.get_str() + " is not an odd prime");
  }
}

bool zero_mod(const IntVector& x, const Integer& p) {
  return std::all_of(x.begin(), x.end(), [&](const Integer& xi) {
    return mpz_divisible_p(xi.get_mpz_t(), p.get_mpz_t()) != 0;
  });
}

// Lattice of all c*v + p*w with v.w = 0 (mod p), after lifting v so that
// v.v = 0 (mod p^2). It holds every column with x = c v (mod p), c != 0 and
// x.x = 0 (mod p^2).
IntMatrix column_lattice_generators(const IntVector& v, const Integer& p) {
  const std::size_t n = v.size();
  std::size_t lead = 0;
  while (lead < n && sgn(mod(v[lead], p)) == 0) ++lead;
  const Integer lead_inv = inverse_mod(v[lead], p);

  IntVector lifted = v;
  Integer vv = exact::dot(v, v);
  Integer m;
  mpz_divexact(m.get_mpz_t(), vv.get_mpz_t(), p.get_mpz_t());
  const Integer t = mod(-m * inverse_mod(2 * v[lead], p), p);
  lifted[lead] += p * t;

  IntMatrix gens(n + 1, n);
  for (std::size_t k = 0; k < n; ++k) gens(0, k) = lifted[k];
  gens(1, lead) = p * p;
  std::size_t row = 2;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == lead) continue;
    gens(row, j) = p;
    gens(row, lead) = -p * mod(v[j] * lead_inv, p);
    ++row;
  }
  return gens;
}

class FrameSearch {
 public:
  FrameSearch(const std::vector<IntVector>& cols, const Integer& p)
      : cols_(cols), n_(cols.empty() ? 0 : cols.front().size()) {
    const std::size_t m = cols.size();
    orthogonal_.assign(m, std::vector<bool>(m, false));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        orthogonal_[a][b] = orthogonal_[b][a] = sgn(exact::dot(cols[a], cols[b])) == 0;
    for (const auto& c : cols) trivial_.push_back(zero_mod(c, p));
  }

  std::vector<std::vector<std::size_t>> run() {
    recurse(0);
    return std::move(frames_);
  }

 private:
  void recurse(std::size_t start) {
    if (chosen_.size() == n_) {
      const bool primitive = std::any_of(chosen_.begin(), chosen_.end(),
                                         [&](std::size_t i) { return !trivial_[i]; });
      if (primitive) frames_.push_back(chosen_);
      return;
    }
    for (std::size_t i = start; i < cols_.size(); ++i) {
      if (cols_.size() - i < n_ - chosen_.size()) break;
      const bool fits = std::all_of(chosen_.begin(), chosen_.end(),
                                    [&](std::size_t j) { return orthogonal_[i][j]; });
      if (!fits) continue;
      chosen_.push_back(i);
      recurse(i + 1);
      chosen_.pop_back();
    }
  }

  const std::vector<IntVector>& cols_;
  std::size_t n_;
  std::vector<std::vector<bool>> orthogonal_;
  std::vector<bool> trivial_;
  std::vector<std::size_t> chosen_;
  std::vector<std::vector<std::size_t>> frames_;
};

}  // namespace

const char* to_string(LevelStatus s) noexcept {
  return s == LevelStatus::Obstructed ? "OBSTRUCTED" : "POSSIBLE";
}

ObstructionResult level_obstruction_check(const graphs::OrientedGraph& g, const Integer& p) {
  require_odd_prime(p);
  const IntMatrix w = spectral::walk_matrix(g);
  const Integer d = exact::det(w);
  if (sgn(d) == 0 || !mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) {
    throw Error(ErrorKind::Argument, p.get_str() + " does not divide det W");
  }
  auto basis = exact::nullspace_mod_p(w.transpose(), p);
  if (basis.size() != 1) {
    throw Error(ErrorKind::Capability, "nullspace of W^T mod " + p.get_str() + " has dimension " +
                                           std::to_string(basis.size()));
  }
  ObstructionResult r;
  r.prime = p;
  r.generator = std::move(basis.front());
  r.self_product = mod(exact::dot(r.generator, r.generator), p);
  r.status = sgn(r.self_product) == 0 ? LevelStatus::Possible : LevelStatus::Obstructed;
  return r;
}

std::vector<IntVector> primitive_columns(const IntVector& v, const Integer& p) {
  require_odd_prime(p);
  const std::size_t n = v.size();
  if (zero_mod(v, p)) throw Error(ErrorKind::Argument, "generator vanishes mod p");
  const Integer p2 = p * p;

  std::vector<IntVector> out;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector x(n);
    x[i] = p;
    out.push_back(std::move(x));
  }
  Integer sum = 0;
  for (const auto& vi : v) sum += vi;
  const bool quadric = sgn(mod(sum, p)) == 0 && sgn(mod(exact::dot(v, v), p)) == 0;
  if (quadric) {
    const IntMatrix basis = lattice_basis(column_lattice_generators(v, p));
    for (auto& x : short_vectors(basis, p2)) {
      Integer s = 0;
      for (const auto& xi : x) s += xi;
      if (s == p && exact::dot(x, x) == p2 && !zero_mod(x, p)) out.push_back(std::move(x));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<RegularRationalOrthogonal> primitive_matrices(const IntVector& v, const Integer& p) {
  const std::vector<IntVector> cols = primitive_columns(v, p);
  std::vector<RegularRationalOrthogonal> out;
  for (const auto& frame : FrameSearch(cols, p).run()) {
    std::vector<IntVector> picked;
    for (std::size_t i : frame) picked.push_back(cols[i]);
    auto q = ortho::level_normalize(IntMatrix::from_columns(picked), p);
    if (q.level() != p || exact::rank_mod_p(q.numerator(), p) != 1) {
      throw Error(ErrorKind::InvalidMatrix, "frame is not a primitive matrix of level " + p.get_str());
    }
    out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

PrimitiveCandidate primitive_search(const graphs::OrientedGraph& g, const Integer& p) {
  ObstructionResult check = level_obstruction_check(g, p);
  PrimitiveCandidate c{p, check.generator, {}};
  if (check.status == LevelStatus::Possible) c.matrices = primitive_matrices(check.generator, p);
  return c;
}

}  // namespace skewspec::mates
