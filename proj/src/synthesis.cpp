#include "paulian/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "paulian/errors.hpp"

namespace paulian {

namespace {

int ceil_log2(std::size_t v) {
  int m = 0;
  std::size_t p = 1;
  while (p < v) {
    p <<= 1;
    ++m;
  }
  return m;
}

int floor_log2(std::size_t v) {
  int m = 0;
  while (v >>= 1)
    ++m;
  return m;
}

} // namespace

CapacityPlan capacity_plan(std::size_t family_size, std::optional<Eigen::Index> dim_ambient,
                           Eigen::Index dim_code, std::optional<int> n, std::optional<int> d) {
  require(family_size >= 1, Errc::invalid_input, "family size must be at least 1");
  require(dim_code >= 1, Errc::invalid_input, "code dimension must be positive");
  if (dim_ambient)
    require(*dim_ambient >= dim_code, Errc::invalid_input, "ambient smaller than code space");

  CapacityPlan plan;
  plan.family_size = family_size;
  const int mc = std::max(1, ceil_log2(family_size));
  // Full coverage needs 2^ceil(log2 |F|) syndrome spaces of code dimension.
  plan.feasible_full =
      !dim_ambient || ((Eigen::Index(1) << mc) * dim_code <= *dim_ambient);
  if (plan.feasible_full) {
    plan.mode = CapacityPlan::Mode::ceil_log;
    plan.m = mc;
  } else {
    plan.mode = CapacityPlan::Mode::floor_log;
    plan.m = std::max(1, floor_log2(family_size));
  }
  if (n && d) {
    require(*n >= 1 && *d >= 1, Errc::invalid_input, "bad n or d");
    long long bound = 0;
    long long binom = 1; // C(n, j)
    long long pow3 = 1;
    for (int j = 0; j <= (*d - 1) / 2; ++j) {
      if (j > 0) {
        binom = binom * (*n - j + 1) / j;
        pow3 *= 3;
      }
      bound += binom * pow3;
    }
    plan.bound_fcos = bound;
  }
  return plan;
}

std::vector<Signature> assign_syndromes(std::size_t family_size, int m) {
  require(m >= 1 && m <= 30, Errc::invalid_input, "generator count out of range");
  require(family_size <= (std::size_t(1) << m), Errc::too_many_errors,
          "family does not fit in 2^m syndromes");
  std::vector<Signature> map;
  map.reserve(family_size);
  for (std::size_t i = 0; i < family_size; ++i)
    map.push_back(index_signature(uint32_t(i), m));
  return map;
}

std::vector<Signature> assign_syndromes(std::size_t family_size, int m,
                                        const std::vector<Signature> &explicit_map) {
  require(m >= 1 && m <= 30, Errc::invalid_input, "generator count out of range");
  require(family_size <= (std::size_t(1) << m), Errc::too_many_errors,
          "family does not fit in 2^m syndromes");
  require(explicit_map.size() == family_size, Errc::invalid_input,
          "explicit syndrome map has the wrong size");
  std::set<uint32_t> seen;
  for (const Signature &s : explicit_map) {
    require(int(s.size()) == m, Errc::invalid_input, "syndrome tuple has the wrong length");
    require(seen.insert(signature_index(s)).second, Errc::invalid_input,
            "syndrome map is not injective");
  }
  require(explicit_map.front() == all_plus(m), Errc::invalid_input,
          "identity must map to the all-plus tuple");
  return explicit_map;
}

namespace {

// Draws the next padding direction: the first standard-basis vector (filtered
// to `allowed` indices) with a residual against `used` columns above tol.
// Appends the normalized residual to `used` and returns it.
Vector draw_direction(Matrix &used, Eigen::Index &used_cols,
                      const std::vector<Eigen::Index> &allowed, std::size_t &cursor,
                      double tol) {
  const Eigen::Index n = used.rows();
  while (cursor < allowed.size()) {
    Vector r = Vector::Unit(n, allowed[cursor]);
    ++cursor;
    for (int pass = 0; pass < 2; ++pass)
      if (used_cols > 0) {
        auto q = used.leftCols(used_cols);
        r -= q * (q.adjoint() * r);
      }
    double nrm = r.norm();
    if (nrm >= tol) {
      r /= nrm;
      used.col(used_cols++) = r;
      return r;
    }
  }
  fail(Errc::insufficient_space, "orthogonal complement cannot supply required dimensions");
}

} // namespace

SyndromeTable build_syndrome_table(const QuantumCode &code, const OrthonormalFamily &fam,
                                   const std::vector<Signature> &syndrome_map, TableMode mode,
                                   const TableOptions &options) {
  const double tol = options.tol;
  require(!syndrome_map.empty() && syndrome_map.size() <= fam.members.size(),
          Errc::invalid_input, "syndrome map does not match the family");
  const int m = int(syndrome_map.front().size());
  const std::size_t n_tuples = std::size_t(1) << m;
  const Eigen::Index N = code.ambient.dim;
  const Eigen::Index k = code.code_frame.dim();

  Eigen::Index kprime = k;
  if (mode == TableMode::extended_full) {
    require(N % (Eigen::Index(1) << m) == 0, Errc::not_divisible,
            "ambient dimension is not divisible by 2^m");
    kprime = N / (Eigen::Index(1) << m);
    require(kprime >= k, Errc::insufficient_space,
            "full-capacity syndrome spaces would be smaller than the code space");
  }

  if (!options.sector_ops.empty())
    require(int(options.sector_ops.size()) == m, Errc::invalid_input,
            "need one sector observable per generator");

  // Running collection of used directions; assigned images enter first so
  // that padding is orthogonal to every F H_C.
  const std::size_t n_assigned = syndrome_map.size();
  Matrix used(N, N);
  Eigen::Index used_cols = 0;
  std::vector<Matrix> assigned_frames(n_assigned);
  for (std::size_t i = 0; i < n_assigned; ++i) {
    Matrix img = fam.members[i] * code.code_frame.frame();
    // family members are isometric on the code space; renormalize exactly
    Subspace s = orthonormal_basis(img, std::sqrt(tol));
    require(s.dim() == k, Errc::table_invalid, "family image degenerated");
    assigned_frames[i] = s.frame();
    used.middleCols(used_cols, k) = s.frame();
    used_cols += k;
  }

  // Standard-basis enumeration order for padding, per tuple.  With declared
  // sector observables the basis indices are filtered to the tuple's joint
  // eigensector; otherwise every tuple sees the full ascending list.
  std::vector<std::vector<Eigen::Index>> allowed(n_tuples);
  if (options.sector_ops.empty()) {
    std::vector<Eigen::Index> all(N);
    for (Eigen::Index j = 0; j < N; ++j)
      all[j] = j;
    for (auto &a : allowed)
      a = all;
  } else {
    for (std::size_t v = 0; v < n_tuples; ++v) {
      Signature t = index_signature(uint32_t(v), m);
      for (Eigen::Index j = 0; j < N; ++j) {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
          Complex diag = options.sector_ops[i](j, j);
          ok = std::abs(diag - Complex(t[std::size_t(i)], 0)) <= 0.5;
        }
        if (ok)
          allowed[v].push_back(j);
      }
    }
  }

  SyndromeTable table;
  table.m = m;
  table.ambient_dim = N;
  table.space_dim = kprime;
  table.spaces.resize(n_tuples);
  table.error_index.assign(n_tuples, std::nullopt);
  table.syndrome_of_member = syndrome_map;

  std::vector<Matrix> frames(n_tuples);
  for (std::size_t v = 0; v < n_tuples; ++v)
    frames[v] = Matrix(N, kprime);
  std::vector<Eigen::Index> filled(n_tuples, 0);
  std::vector<std::size_t> cursors(n_tuples, 0);

  for (std::size_t i = 0; i < n_assigned; ++i) {
    uint32_t v = signature_index(syndrome_map[i]);
    require(!table.error_index[v], Errc::invalid_input, "duplicate syndrome assignment");
    table.error_index[v] = i;
    frames[v].leftCols(k) = assigned_frames[i];
    filled[v] = k;
  }

  // Padding in ascending tuple order, each space topped up to k'.
  for (std::size_t v = 0; v < n_tuples; ++v) {
    while (filled[v] < kprime)
      frames[v].col(filled[v]++) = draw_direction(used, used_cols, allowed[v], cursors[v],
                                                  std::sqrt(tol));
    table.spaces[v] = Subspace(frames[v]);
  }

  validate_syndrome_table(code, fam, table, tol);
  return table;
}

void validate_syndrome_table(const QuantumCode &code, const OrthonormalFamily &fam,
                             const SyndromeTable &table, double tol) {
  const std::size_t n_tuples = std::size_t(1) << table.m;
  require(table.spaces.size() == n_tuples && table.error_index.size() == n_tuples,
          Errc::table_invalid, "table is missing tuples");
  // equidimensional and pairwise orthogonal
  for (std::size_t v = 0; v < n_tuples; ++v) {
    require(table.spaces[v].dim() == table.space_dim, Errc::table_invalid,
            "syndrome spaces are not equidimensional");
    for (std::size_t w = v + 1; w < n_tuples; ++w) {
      Matrix overlap = table.spaces[v].frame().adjoint() * table.spaces[w].frame();
      require(max_abs(overlap) <= std::sqrt(tol), Errc::table_invalid,
              "syndrome spaces are not orthogonal");
    }
  }
  // F_(t) H_C inside its assigned space, and H_C inside the all-plus space
  const Matrix &cf = code.code_frame.frame();
  for (std::size_t i = 0; i < table.syndrome_of_member.size(); ++i) {
    const Subspace &sp = table.space(table.syndrome_of_member[i]);
    Matrix img = fam.members[i] * cf;
    Matrix residual = img - sp.frame() * (sp.frame().adjoint() * img);
    require(max_abs(residual) <= std::sqrt(tol), Errc::table_invalid,
            "assigned error image is not inside its syndrome space");
  }
  const Subspace &plus_space = table.space(all_plus(table.m));
  Matrix residual = cf - plus_space.frame() * (plus_space.frame().adjoint() * cf);
  require(max_abs(residual) <= std::sqrt(tol), Errc::table_invalid,
          "code space is not inside the all-plus syndrome space");
}

Matrix build_encoder(const SyndromeTable &table, const QuantumCode &code,
                     const OrthonormalFamily &fam, double tol) {
  const Eigen::Index N = table.ambient_dim;
  const Eigen::Index kprime = table.space_dim;
  const Eigen::Index k = code.code_frame.dim();
  const std::size_t n_tuples = std::size_t(1) << table.m;
  const Eigen::Index rows = kprime * Eigen::Index(n_tuples);

  const Matrix &ref = table.spaces[0].frame(); // H_(I): tuple index 0 is all-plus
  Matrix U = Matrix::Zero(rows, N);
  for (std::size_t v = 0; v < n_tuples; ++v) {
    const Matrix &sf = table.spaces[v].frame();
    for (Eigen::Index c = 0; c < kprime; ++c) {
      Vector coord;
      if (table.error_index[v] && c < k) {
        // V_(t) = adjoint of the isometry F_(t) Pi_C on the image part
        const Matrix &F = fam.members[*table.error_index[v]];
        Vector back = F.adjoint() * sf.col(c);
        coord = ref.adjoint() * back;
      } else {
        coord = Vector::Unit(kprime, c);
      }
      for (Eigen::Index r = 0; r < kprime; ++r)
        U.row(r * Eigen::Index(n_tuples) + Eigen::Index(v)) += coord[r] * sf.col(c).adjoint();
    }
  }
  require(approx_equal(U * U.adjoint(), Matrix::Identity(rows, rows), std::sqrt(tol)),
          Errc::table_invalid, "encoder is not an isometry onto the factorized space");
  return U;
}

PaulianReport verify_paulian(const Matrix &P, const Subspace &domain, double tol) {
  const Matrix &f = domain.frame();
  require(P.rows() == f.rows() && P.cols() == f.rows(), Errc::dimension_mismatch,
          "operator does not act on the ambient space");
  // domain invariance: P maps the domain into itself
  Matrix image = P * f;
  Matrix leak = image - f * (f.adjoint() * image);
  require(max_abs(leak) <= std::sqrt(tol), Errc::not_invariant,
          "operator does not preserve the domain");

  Matrix R = f.adjoint() * P * f; // restriction in domain coordinates
  const Eigen::Index r = R.rows();
  PaulianReport rep;
  rep.unitary = is_unitary(R, tol);
  Matrix R2 = R * R;
  if (approx_equal(R2, Matrix::Identity(r, r), tol))
    rep.kind = PaulianReport::Kind::involution;
  else if (approx_equal(R2, Matrix(-Matrix::Identity(r, r)), tol))
    rep.kind = PaulianReport::Kind::counterinvolution;
  else
    rep.kind = PaulianReport::Kind::neither;

  if (rep.kind != PaulianReport::Kind::neither) {
    // a counterinvolution is an involution multiplied by i
    Matrix inv = rep.kind == PaulianReport::Kind::involution ? R : Matrix(R / Complex(0, 1));
    auto [plus, minus] = involution_eigensplit(inv, std::sqrt(tol));
    rep.dim_plus = plus.dim();
    rep.dim_minus = minus.dim();
    rep.isomorphic = rep.dim_plus == rep.dim_minus || rep.dim_plus == 0 || rep.dim_minus == 0;
  }
  rep.paulian = rep.unitary && rep.kind != PaulianReport::Kind::neither && rep.isomorphic;
  return rep;
}

PaulianGroup derive_generators(const Matrix &encoder, const SyndromeTable &table, double tol) {
  const Eigen::Index N = table.ambient_dim;
  const std::size_t n_tuples = std::size_t(1) << table.m;
  const Eigen::Index rows = table.space_dim * Eigen::Index(n_tuples);
  require(encoder.rows() == rows && encoder.cols() == N, Errc::not_unitary,
          "encoder has the wrong shape");
  require(approx_equal(encoder * encoder.adjoint(), Matrix::Identity(rows, rows), std::sqrt(tol)),
          Errc::not_unitary, "encoder is not unitary on its domain");

  PaulianGroup group;
  group.encoder = encoder;

  // H' = direct sum of all syndrome spaces
  Matrix domain_cols(N, rows);
  for (std::size_t v = 0; v < n_tuples; ++v)
    domain_cols.middleCols(Eigen::Index(v) * table.space_dim, table.space_dim) =
        table.spaces[v].frame();
  group.domain = orthonormal_basis(domain_cols, std::sqrt(tol));
  require(group.domain.dim() == rows, Errc::table_invalid,
          "syndrome spaces do not assemble into a 2^m k' dimensional domain");

  for (int i = 1; i <= table.m; ++i) {
    // diagonal signs of Z_i / permutation of X_i on the flat H_B index
    Vector zsign(rows);
    Eigen::VectorXi xperm(rows);
    for (Eigen::Index flat = 0; flat < rows; ++flat) {
      uint32_t v = uint32_t(flat % Eigen::Index(n_tuples));
      Eigen::Index r = flat / Eigen::Index(n_tuples);
      bool bit = (v >> (table.m - i)) & 1;
      zsign[flat] = bit ? Complex(-1, 0) : Complex(1, 0);
      uint32_t vf = v ^ (uint32_t(1) << (table.m - i));
      xperm[flat] = int(r * Eigen::Index(n_tuples) + Eigen::Index(vf));
    }
    Matrix zc = encoder.adjoint() * zsign.asDiagonal() * encoder;
    Matrix xflip(rows, rows);
    xflip.setZero();
    for (Eigen::Index flat = 0; flat < rows; ++flat)
      xflip(xperm[flat], flat) = 1.0;
    Matrix xc = encoder.adjoint() * xflip * encoder;

    // signed projector sum over syndrome spaces must agree
    Matrix zp = Matrix::Zero(N, N);
    for (std::size_t v = 0; v < n_tuples; ++v) {
      double sign = ((v >> (table.m - i)) & 1) ? -1.0 : 1.0;
      zp += sign * table.spaces[v].projector();
    }
    double dev = max_abs(Matrix(zc - zp));
    group.cross_check_deviation = std::max(group.cross_check_deviation, dev);
    require(dev <= tol, Errc::certification_failure,
            "conjugation and projector constructions disagree");

    group.z_gens.push_back(zc);
    group.x_gens.push_back(xc);

    // +-1 eigenspace frames straight from the table
    const Eigen::Index half = rows / 2;
    Matrix pf(N, half), mf(N, half);
    Eigen::Index pc = 0, mc = 0;
    for (std::size_t v = 0; v < n_tuples; ++v) {
      if ((v >> (table.m - i)) & 1)
        mf.middleCols(mc, table.space_dim) = table.spaces[v].frame(), mc += table.space_dim;
      else
        pf.middleCols(pc, table.space_dim) = table.spaces[v].frame(), pc += table.space_dim;
    }
    group.plus_spaces.emplace_back(pf);
    group.minus_spaces.emplace_back(mf);
  }

  for (const Matrix &z : group.z_gens)
    group.certification.push_back(verify_paulian(z, group.domain, tol));
  for (const PaulianReport &rep : group.certification)
    require(rep.paulian, Errc::certification_failure, "derived generator failed certification");
  return group;
}

} // namespace paulian
