#include "drazinkit/json_io.hpp"

#include <fstream>

namespace drazinkit {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::Schema, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t dimension(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) schema(std::string("'") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

Kernel parse_kernel(const json& j) {
  const json& k = field(j, "kernel");
  if (k == "exact") return Kernel::Exact;
  if (k == "float") return Kernel::Float;
  schema("kernel must be \"exact\" or \"float\"");
}

mpq_class exact_part(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return mpq_class(v.get<long>());
  schema("exact entries must be \"p/q\" strings");
}

double float_part(const json& v) {
  if (!v.is_number()) schema("float entries must be numbers");
  return v.get<double>();
}

template <KernelScalar T>
Matrix<T> parse_entries(const json& j) {
  const std::size_t rows = dimension(j, "rows");
  const std::size_t cols = dimension(j, "cols");
  const json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != rows * cols) {
    schema("entries must be an array of rows*cols pairs");
  }
  std::vector<T> data;
  data.reserve(rows * cols);
  for (const json& e : entries) {
    if (!e.is_array() || e.size() != 2) schema("each entry must be a [re, im] pair");
    if constexpr (is_exact_v<T>) {
      data.emplace_back(exact_part(e[0]), exact_part(e[1]));
    } else {
      data.emplace_back(float_part(e[0]), float_part(e[1]));
    }
  }
  return Matrix<T>(rows, cols, std::move(data));
}

template <KernelScalar T>
json matrix_json(const Matrix<T>& a) {
  json entries = json::array();
  for (const T& z : a.entries()) {
    if constexpr (is_exact_v<T>) {
      entries.push_back({rational_string(z.re()), rational_string(z.im())});
    } else {
      entries.push_back({z.real(), z.imag()});
    }
  }
  return {{"kernel", std::string(to_string(kernel_of_v<T>))}, {"rows", a.rows()}, {"cols", a.cols()}, {"entries", entries}};
}

template <template <class> class Holder>
std::variant<Holder<Gaussian>, Holder<Complex>> parse_trio(const json& j, const char* k0, const char* k1,
                                                           const char* k2) {
  const AnyMatrix m0 = matrix_from_json(field(j, k0));
  const AnyMatrix m1 = matrix_from_json(field(j, k1));
  const AnyMatrix m2 = matrix_from_json(field(j, k2));
  if (m0.index() != m1.index() || m0.index() != m2.index()) {
    throw Error(ErrorCode::KernelMismatch, "all matrices of one document must share a kernel");
  }
  if (m0.index() == 0) {
    return Holder<Gaussian>{std::get<0>(m0), std::get<0>(m1), std::get<0>(m2)};
  }
  return Holder<Complex>{std::get<1>(m0), std::get<1>(m1), std::get<1>(m2)};
}

}  // namespace

json to_json(const ExactMatrix& a) { return matrix_json(a); }
json to_json(const FloatMatrix& a) { return matrix_json(a); }
json to_json(const AnyMatrix& a) {
  return std::visit([](const auto& m) { return to_json(m); }, a);
}

AnyMatrix matrix_from_json(const json& j) {
  if (parse_kernel(j) == Kernel::Exact) return parse_entries<Gaussian>(j);
  return parse_entries<Complex>(j);
}

template <KernelScalar T>
Matrix<T> matrix_from_json_as(const json& j) {
  if (parse_kernel(j) != kernel_of_v<T>) {
    throw Error(ErrorCode::KernelMismatch, "expected a " + std::string(to_string(kernel_of_v<T>)) + " matrix");
  }
  return parse_entries<T>(j);
}

FloatMatrix as_float(const AnyMatrix& a) {
  return std::visit([](const auto& m) { return to_float(m); }, a);
}

Kernel kernel_of(const AnyMatrix& a) { return a.index() == 0 ? Kernel::Exact : Kernel::Float; }

json to_json(const Report& r) {
  json verdicts = json::object();
  json residuals = json::object();
  for (const auto& [name, v] : r.verdicts()) verdicts[name] = v;
  for (const auto& [name, v] : r.residuals()) residuals[name] = v;
  return {{"verdicts", verdicts}, {"residuals", residuals}, {"kernel", std::string(to_string(r.kernel()))}};
}

Report report_from_json(const json& j) {
  Report r(parse_kernel(j));
  const json& verdicts = field(j, "verdicts");
  const json& residuals = field(j, "residuals");
  if (!verdicts.is_object() || !residuals.is_object()) schema("verdicts and residuals must be objects");
  for (const auto& [name, v] : verdicts.items()) {
    if (!v.is_boolean()) schema("verdict '" + name + "' must be boolean");
    const double res = residuals.contains(name) ? float_part(residuals.at(name)) : (v.get<bool>() ? 0.0 : 1.0);
    r.add(name, v.get<bool>(), res);
  }
  return r;
}

template <KernelScalar T>
json to_json(const DrazinData<T>& d) {
  return {{"index", d.index}, {"dinv", to_json(d.dinv)}, {"idempotent", to_json(d.idempotent)}};
}

template <KernelScalar T>
json to_json(const Decomposition<T>& d) {
  return {{"basis", to_json(d.basis)}, {"basis_inverse", to_json(d.basis_inverse)}, {"core", to_json(d.core)},
          {"nil", to_json(d.nil)},     {"core_dim", d.core_dim},                     {"index", d.index}};
}

template <KernelScalar T>
json to_json(const SimilarityCertificate<T>& c) {
  return {{"S", to_json(c.S)},
          {"N", to_json(c.N)},
          {"target", c.target == SimilarityTarget::DrazinInverse ? "drazin_inverse" : "operator"},
          {"residual", c.residual},
          {"basis_condition", c.basis_condition}};
}

template <KernelScalar T>
json to_json(const BlockTriple<T>& bt) {
  return {{"T", to_json(bt.t)}, {"C", to_json(bt.c)}, {"S", to_json(bt.s)}};
}

template <KernelScalar T>
json to_json(const IntertwiningInstance<T>& inst) {
  return {{"T", to_json(inst.op)}, {"A", to_json(inst.a)}, {"B", to_json(inst.b)}};
}

AnyTriple triple_from_json(const json& j) {
  // field order of BlockTriple is {t, c, s}
  return parse_trio<BlockTriple>(j, "T", "C", "S");
}

AnyInstance instance_from_json(const json& j) { return parse_trio<IntertwiningInstance>(j, "T", "A", "B"); }

AnyTriple as_float(const AnyTriple& t) {
  return std::visit(
      [](const auto& bt) -> AnyTriple { return BlockTriple<Complex>{to_float(bt.t), to_float(bt.c), to_float(bt.s)}; },
      t);
}

AnyInstance as_float(const AnyInstance& t) {
  return std::visit(
      [](const auto& in) -> AnyInstance {
        return IntertwiningInstance<Complex>{to_float(in.op), to_float(in.a), to_float(in.b)};
      },
      t);
}

json to_json(const GenSpec& s) {
  return {{"seed", s.seed},
          {"size", s.size},
          {"index_cap", s.index_cap},
          {"kernel", std::string(to_string(s.kernel))},
          {"entry_bound", s.entry_bound},
          {"prng", std::string(SplitMix64::algorithm)}};
}

GenSpec genspec_from_json(const json& j) {
  if (!j.is_object()) schema("GenSpec must be an object");
  GenSpec s;
  try {
    if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("size")) s.size = j.at("size").get<std::size_t>();
    if (j.contains("index_cap")) s.index_cap = j.at("index_cap").get<std::size_t>();
    if (j.contains("entry_bound")) s.entry_bound = j.at("entry_bound").get<double>();
  } catch (const json::exception& e) {
    schema(std::string("GenSpec: ") + e.what());
  }
  if (j.contains("kernel")) s.kernel = parse_kernel(j);
  if (j.contains("prng") && j.at("prng") != std::string(SplitMix64::algorithm)) schema("unsupported prng");
  try {
    s.validate();
  } catch (const Error& e) {
    schema(e.what());
  }
  return s;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) schema("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    schema("'" + path + "': " + e.what());
  }
}

#define DRAZINKIT_INSTANTIATE(T)                                   \
  template Matrix<T> matrix_from_json_as(const json&);             \
  template json to_json(const DrazinData<T>&);                     \
  template json to_json(const Decomposition<T>&);                  \
  template json to_json(const SimilarityCertificate<T>&);          \
  template json to_json(const BlockTriple<T>&);                    \
  template json to_json(const IntertwiningInstance<T>&);

DRAZINKIT_INSTANTIATE(Gaussian)
DRAZINKIT_INSTANTIATE(Complex)

#undef DRAZINKIT_INSTANTIATE

}  // namespace drazinkit
