#include "curvspace/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "curvspace/errors.hpp"
#include "curvspace/linsolve.hpp"

namespace curvspace {

namespace {

Matrix elementary(std::size_t n, std::size_t r, std::size_t c, Field f) {
  Matrix m(n, n, f);
  m.at(r, c) = Scalar::one(f);
  return m;
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

// Splits "name(args)" at top-level commas; returns {name, {arg...}}.
struct SpecCall {
  std::string name;
  std::vector<std::string> args;
};

SpecCall split_call(const std::string& spec) {
  SpecCall out;
  auto open = spec.find('(');
  if (open == std::string::npos) {
    out.name = spec;
    return out;
  }
  if (spec.back() != ')') throw ParseError("unbalanced parentheses in '" + spec + "'");
  out.name = spec.substr(0, open);
  std::string inner = spec.substr(open + 1, spec.size() - open - 2);
  int depth = 0;
  std::string cur;
  for (char c : inner) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.args.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in '" + spec + "'");
  if (!cur.empty()) out.args.push_back(cur);
  return out;
}

std::size_t parse_count(const std::string& s, const std::string& spec) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      }))
    throw ParseError("expected a number in rep-spec '" + spec + "'");
  return static_cast<std::size_t>(std::stoul(s));
}

} // namespace

CatalogEntry so_entry(std::size_t n, Field f) {
  if (n < 2) throw PreconditionError("so(n): n >= 2 required");
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      basis.push_back(elementary(n, i, j, f) - elementary(n, j, i, f));
      labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  LieAlgebra L = LieAlgebra::from_matrices(basis, std::move(labels));
  Representation rep(L, std::move(basis), Matrix::identity(n, f));
  rep.validate();
  return {"so(" + std::to_string(n) + ")", std::move(rep), "orthogonal family"};
}

CatalogEntry sp_entry(std::size_t two_m, Field f) {
  if (two_m < 2 || two_m % 2 != 0) throw PreconditionError("sp(2m): even size >= 2 required");
  const std::size_t m = two_m / 2;
  std::vector<Matrix> basis;
  // [[X, Y], [Z, -X^T]] with Y, Z symmetric
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      basis.push_back(elementary(two_m, i, j, f) - elementary(two_m, m + j, m + i, f));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      basis.push_back(i == j ? elementary(two_m, i, m + i, f)
                             : elementary(two_m, i, m + j, f) + elementary(two_m, j, m + i, f));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      basis.push_back(i == j ? elementary(two_m, m + i, i, f)
                             : elementary(two_m, m + i, j, f) + elementary(two_m, m + j, i, f));
  Matrix omega(two_m, two_m, f);
  for (std::size_t i = 0; i < m; ++i) {
    omega.at(i, m + i) = Scalar::one(f);
    omega.at(m + i, i) = -Scalar::one(f);
  }
  LieAlgebra L = LieAlgebra::from_matrices(basis);
  Representation rep(L, std::move(basis), std::move(omega));
  rep.validate();
  return {"sp(" + std::to_string(two_m) + ")", std::move(rep), "symplectic family"};
}

CatalogEntry sl2_defining_entry(Field f) {
  Matrix F({{0, 0}, {1, 0}}, f);
  Matrix H({{1, 0}, {0, -1}}, f);
  Matrix E({{0, 1}, {0, 0}}, f);
  LieAlgebra L = LieAlgebra::from_matrices({F, H, E}, {"F", "H", "E"});
  Matrix omega({{0, 1}, {-1, 0}}, f);
  Representation rep(L, {F, H, E}, std::move(omega));
  rep.validate();
  return {"sl2", std::move(rep), "rank-one family"};
}

CatalogEntry sl2_irrep_entry(std::size_t k, Field f) {
  if (k < 1) throw PreconditionError("sl2:sym(k): k >= 1 required");
  CatalogEntry base = sl2_defining_entry(f);
  Representation rep = k == 1 ? base.rep : sym_power(base.rep, k);
  return {"sl2:sym(" + std::to_string(k) + ")", std::move(rep), "rank-one family"};
}

CatalogEntry sl2_tensor_symplectic_entry(const CatalogEntry& k_entry) {
  const Representation& krep = k_entry.rep;
  if (!krep.has_form() || krep.form_kind() != FormKind::Skew)
    throw PreconditionError("sl2xk: the inner entry must carry a skew form");
  if (krep.space_dim() % 2 != 0)
    throw PreconditionError("sl2xk: the inner entry must act on an even-dimensional space");
  CatalogEntry sl2 = sl2_defining_entry(krep.field());
  Representation rep = outer_tensor(sl2.rep, krep);
  if (rep.form_kind() != FormKind::Symmetric)
    throw PreconditionError("sl2xk: product form failed to be symmetric");
  return {"sl2xk(" + k_entry.name + ")", std::move(rep), "quaternionic tensor family"};
}

CatalogEntry so_pair_tensor_entry(std::size_t n1, std::size_t n2, Field f) {
  if (n1 < 3 || n2 < 3) throw PreconditionError("tensor(so,so): sizes >= 3 required");
  Representation rep = outer_tensor(so_entry(n1, f).rep, so_entry(n2, f).rep);
  return {"tensor(so(" + std::to_string(n1) + "),so(" + std::to_string(n2) + "))",
          std::move(rep), "tensor-pair family"};
}

CatalogEntry sp_pair_tensor_entry(std::size_t two_m1, std::size_t two_m2, Field f) {
  if (two_m1 < 2 || two_m2 < 2 || two_m1 % 2 || two_m2 % 2)
    throw PreconditionError("tensor(sp,sp): even sizes >= 2 required");
  Representation rep = outer_tensor(sp_entry(two_m1, f).rep, sp_entry(two_m2, f).rep);
  if (rep.form_kind() != FormKind::Symmetric)
    throw PreconditionError("tensor(sp,sp): product form failed to be symmetric");
  return {"tensor(sp(" + std::to_string(two_m1) + "),sp(" + std::to_string(two_m2) + "))",
          std::move(rep), "tensor-pair family"};
}

CatalogEntry sp6_lambda30_entry(Field f) {
  CatalogEntry sp6 = sp_entry(6, f);
  Representation lambda3 = ext_power(sp6.rep, 3);
  const Matrix& omega = sp6.rep.form();

  // Contraction to the 6-space: wedge (a,b,c) -> O(a,b) e_c - O(a,c) e_b + O(b,c) e_a.
  auto basis = ext_power_basis(6, 3);
  Matrix contraction(6, basis.size(), f);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto& t = basis[col];
    contraction.at(t[2], col) += omega.at(t[0], t[1]);
    contraction.at(t[1], col) -= omega.at(t[0], t[2]);
    contraction.at(t[0], col) += omega.at(t[1], t[2]);
  }
  Matrix sub = kernel_basis_matrix(contraction); // 20 x 14

  std::vector<Matrix> action;
  for (std::size_t g = 0; g < sp6.rep.algebra().dim(); ++g) {
    auto coords = solve_all(sub, lambda3.action(g) * sub);
    if (!coords) throw Error("sp6:lambda30: contraction kernel is not invariant");
    action.push_back(std::move(*coords));
  }
  Matrix form = sub.transpose() * lambda3.form() * sub;
  Representation rep(sp6.rep.algebra(), sub.cols(), std::move(action), std::move(form));
  rep.validate();
  return {"sp6:lambda30", std::move(rep), "extended symplectic family"};
}

CatalogEntry parse_rep_spec(const std::string& spec, Field f, bool extended) {
  std::string s = strip_spaces(spec);
  if (s.empty()) throw ParseError("empty rep-spec");
  if (s == "sp6:lambda30") {
    if (!extended) throw ParseError("sp6:lambda30 is in the extended catalog; enable it first");
    return sp6_lambda30_entry(f);
  }
  SpecCall call = split_call(s);
  if (call.name == "so" && call.args.size() == 1)
    return so_entry(parse_count(call.args[0], s), f);
  if (call.name == "sp" && call.args.size() == 1)
    return sp_entry(parse_count(call.args[0], s), f);
  if (call.name == "sl2" && call.args.empty()) return sl2_defining_entry(f);
  if (call.name == "sl2:sym" && call.args.size() == 1)
    return sl2_irrep_entry(parse_count(call.args[0], s), f);
  if (call.name == "sl2xk" && call.args.size() == 1)
    return sl2_tensor_symplectic_entry(parse_rep_spec(call.args[0], f, extended));
  if (call.name == "tensor" && call.args.size() == 2) {
    SpecCall a = split_call(call.args[0]);
    SpecCall b = split_call(call.args[1]);
    if (a.name == "so" && b.name == "so" && a.args.size() == 1 && b.args.size() == 1)
      return so_pair_tensor_entry(parse_count(a.args[0], s), parse_count(b.args[0], s), f);
    if (a.name == "sp" && b.name == "sp" && a.args.size() == 1 && b.args.size() == 1)
      return sp_pair_tensor_entry(parse_count(a.args[0], s), parse_count(b.args[0], s), f);
    throw ParseError("tensor(...) expects so/so or sp/sp arguments");
  }
  throw ParseError("unknown rep-spec '" + spec + "'");
}

} // namespace curvspace
