#include "paulian/pauli.hpp"

#include <bit>
#include <optional>

#include "paulian/errors.hpp"

namespace paulian {

namespace {

constexpr int kMaxDenseQubits = 14;

uint64_t site_bit(int n, int site) { return uint64_t(1) << (n - site); }

int parity64(uint64_t v) { return std::popcount(v) & 1; }

void check_same_length(const PauliOp &p, const PauliOp &q) {
  require(p.n == q.n, Errc::length_mismatch, "Pauli operators act on different qubit counts");
}

} // namespace

uint32_t signature_index(const Signature &s) {
  uint32_t v = 0;
  for (int8_t c : s.comps)
    v = (v << 1) | (c < 0 ? 1u : 0u);
  return v;
}

Signature index_signature(uint32_t v, int m) {
  std::vector<int8_t> c(m);
  for (int i = 0; i < m; ++i)
    c[i] = ((v >> (m - 1 - i)) & 1) ? int8_t(-1) : int8_t(1);
  return Signature(std::move(c));
}

Signature all_plus(int m) { return Signature(std::vector<int8_t>(m, 1)); }

std::string signature_str(const Signature &s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += s[i] > 0 ? "+1" : "-1";
    if (i + 1 < s.size())
      out += ",";
  }
  return out + ")";
}

Signature signature_product(const Signature &a, const Signature &b) {
  require(a.size() == b.size(), Errc::length_mismatch, "signature tuples have different lengths");
  std::vector<int8_t> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    c[i] = int8_t(a[i] * b[i]);
  return Signature(std::move(c));
}

PauliOp parse_pauli(const std::string &text) {
  std::size_t pos = 0;
  uint8_t prefix = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    bool neg = text[pos] == '-';
    ++pos;
    if (pos < text.size() && text[pos] == 'i') {
      prefix = neg ? 3 : 1;
      ++pos;
    } else {
      prefix = neg ? 2 : 0;
    }
  }
  require(pos < text.size(), Errc::parse_error, "empty Pauli string: '" + text + "'");
  PauliOp p;
  p.n = int(text.size() - pos);
  require(p.n <= 64, Errc::parse_error, "Pauli strings are limited to 64 qubits");
  p.phase = prefix;
  for (int site = 1; pos < text.size(); ++pos, ++site) {
    uint64_t bit = site_bit(p.n, site);
    switch (text[pos]) {
    case 'I': break;
    case 'X': p.xbits |= bit; break;
    case 'Z': p.zbits |= bit; break;
    case 'Y': // Y = iXZ
      p.xbits |= bit;
      p.zbits |= bit;
      p.phase = uint8_t((p.phase + 1) & 3);
      break;
    default:
      fail(Errc::parse_error, std::string("invalid Pauli character '") + text[pos] + "'");
    }
  }
  return p;
}

std::string format_pauli(const PauliOp &p) {
  int ys = std::popcount(p.xbits & p.zbits);
  int disp = (int(p.phase) - ys) & 3;
  static const char *prefixes[4] = {"", "+i", "-", "-i"};
  std::string out = prefixes[disp];
  for (int site = 1; site <= p.n; ++site) {
    uint64_t bit = site_bit(p.n, site);
    bool x = p.xbits & bit, z = p.zbits & bit;
    out += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }
  return out;
}

PauliOp mul(const PauliOp &p, const PauliOp &q) {
  check_same_length(p, q);
  PauliOp r;
  r.n = p.n;
  r.xbits = p.xbits ^ q.xbits;
  r.zbits = p.zbits ^ q.zbits;
  // moving Z^{z_p} past X^{x_q} costs (-1)^{z_p . x_q}
  r.phase = uint8_t((p.phase + q.phase + 2 * parity64(p.zbits & q.xbits)) & 3);
  return r;
}

int weight(const PauliOp &p) { return std::popcount(p.xbits | p.zbits); }

bool commutes(const PauliOp &p, const PauliOp &q) {
  return (parity64(p.xbits & q.zbits) ^ parity64(p.zbits & q.xbits)) == 0;
}

Signature comm_signature(const PauliOp &p, const std::vector<PauliOp> &gens) {
  std::vector<int8_t> c(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    check_same_length(p, gens[j]);
    c[j] = commutes(p, gens[j]) ? int8_t(1) : int8_t(-1);
  }
  return Signature(std::move(c));
}

Vector apply_pauli(const PauliOp &p, const Vector &v) {
  require(p.n <= kMaxDenseQubits, Errc::invalid_input, "dense Pauli action limited to 14 qubits");
  const uint64_t dim = uint64_t(1) << p.n;
  require(uint64_t(v.size()) == dim, Errc::dimension_mismatch,
          "state dimension does not match qubit count");
  static const Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  Complex ph = kPhases[p.phase];
  Vector out(v.size());
  for (uint64_t b = 0; b < dim; ++b) {
    Complex amp = ph * v[Eigen::Index(b)];
    if (parity64(p.zbits & b))
      amp = -amp;
    out[Eigen::Index(b ^ p.xbits)] = amp;
  }
  return out;
}

Matrix pauli_matrix(const PauliOp &p) {
  require(p.n <= kMaxDenseQubits, Errc::invalid_input, "dense Pauli matrix limited to 14 qubits");
  const uint64_t dim = uint64_t(1) << p.n;
  static const Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  Matrix m = Matrix::Zero(dim, dim);
  for (uint64_t b = 0; b < dim; ++b) {
    Complex amp = kPhases[p.phase];
    if (parity64(p.zbits & b))
      amp = -amp;
    m(Eigen::Index(b ^ p.xbits), Eigen::Index(b)) = amp;
  }
  return m;
}

std::optional<PauliOp> pauli_from_matrix(const Matrix &m, int n, double tol) {
  const Eigen::Index dim = Eigen::Index(1) << n;
  if (m.rows() != dim || m.cols() != dim)
    return std::nullopt;
  // column 0 fixes the x pattern and the overall phase
  Eigen::Index hit = -1;
  for (Eigen::Index r = 0; r < dim; ++r) {
    if (std::abs(m(r, 0)) > tol) {
      if (hit >= 0)
        return std::nullopt;
      hit = r;
    }
  }
  if (hit < 0)
    return std::nullopt;
  uint64_t x = uint64_t(hit);
  Complex a0 = m(hit, 0);
  if (std::abs(std::abs(a0) - 1.0) > tol)
    return std::nullopt;
  int k = -1;
  static const Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (int i = 0; i < 4; ++i)
    if (std::abs(a0 - kPhases[i]) < 1e-6)
      k = i;
  if (k < 0)
    return std::nullopt;
  // z pattern from single-bit columns
  uint64_t z = 0;
  for (int b = 0; b < n; ++b) {
    uint64_t col = uint64_t(1) << b;
    Complex av = m(Eigen::Index(col ^ x), Eigen::Index(col));
    if (std::abs(av - a0) < std::abs(av + a0))
      continue; // sign +1
    z |= col;
  }
  PauliOp p{n, uint8_t(k), x, z};
  if (!approx_equal(pauli_matrix(p), m, std::max(tol, 1e-7)))
    return std::nullopt;
  return p;
}

namespace {

// Position of the leading set bit in the combined (x,z) GF(2) vector; x bits
// rank above z bits.  -1 for the identity pattern.
int lead_pos(const PauliOp &p) {
  if (p.xbits)
    return 64 + (63 - std::countl_zero(p.xbits));
  if (p.zbits)
    return 63 - std::countl_zero(p.zbits);
  return -1;
}

} // namespace

SubgroupReport subgroup_analysis(const std::vector<PauliOp> &gens) {
  SubgroupReport rep;
  if (gens.empty()) {
    rep.linearly_independent = true;
    rep.abelian = true;
    rep.phaseless_order = 1;
    return rep;
  }
  for (std::size_t i = 1; i < gens.size(); ++i)
    check_same_length(gens[0], gens[i]);

  rep.abelian = true;
  bool anticommuting_pair = false;
  for (std::size_t i = 0; i < gens.size() && !anticommuting_pair; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!commutes(gens[i], gens[j])) {
        anticommuting_pair = true;
        rep.abelian = false;
        break;
      }

  bool counterinvolution = false;
  for (const PauliOp &g : gens)
    if (mul(g, g).phase == 2)
      counterinvolution = true;

  // GF(2) elimination over the symplectic (x|z) rows with exact phase
  // tracking.  A generator that reduces to the identity pattern leaves a
  // pure-phase relation i^k I; with no anticommuting pair and no
  // counterinvolution the phase map is linear over the nullspace, so the
  // relations collected here decide -I membership.
  std::vector<PauliOp> pivot_by_pos(129, PauliOp{});
  std::vector<bool> has_pivot(129, false);
  bool phase_relation = false;
  int rank = 0;
  for (const PauliOp &g : gens) {
    PauliOp cur = g;
    for (;;) {
      int lp = lead_pos(cur);
      if (lp < 0) {
        if (cur.phase != 0)
          phase_relation = true;
        break;
      }
      if (!has_pivot[lp]) {
        pivot_by_pos[lp] = cur;
        has_pivot[lp] = true;
        ++rank;
        break;
      }
      cur = mul(cur, pivot_by_pos[lp]);
    }
  }

  rep.contains_minus_i = anticommuting_pair || counterinvolution || phase_relation;
  rep.linearly_independent = !rep.contains_minus_i;
  rep.phaseless_order = uint64_t(1) << rank;
  return rep;
}

Vector stabilized_state(const std::vector<PauliOp> &gens) {
  require(!gens.empty(), Errc::not_maximal_abelian, "no generators supplied");
  const int n = gens.front().n;
  require(int(gens.size()) == n, Errc::not_maximal_abelian,
          "need exactly n independent commuting generators");
  SubgroupReport rep = subgroup_analysis(gens);
  require(rep.abelian, Errc::not_maximal_abelian, "generators do not commute");
  require(!rep.contains_minus_i, Errc::not_maximal_abelian, "generators generate -I");
  require(rep.phaseless_order == (uint64_t(1) << n), Errc::not_maximal_abelian,
          "generators are not independent");

  const Eigen::Index dim = Eigen::Index(1) << n;
  for (Eigen::Index seed = 0; seed < dim; ++seed) {
    Vector state = Vector::Unit(dim, seed);
    for (const PauliOp &g : gens)
      state = (state + apply_pauli(g, state)) / 2.0;
    if (state.norm() >= 1e-6)
      return fix_global_phase(state / state.norm());
  }
  fail(Errc::zero_projection, "all basis seeds project to zero"); // unreachable for valid input
}

} // namespace paulian
