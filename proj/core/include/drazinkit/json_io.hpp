#pragma once

#include <variant>

#include <json.hpp>

#include "drazinkit/blockops.hpp"
#include "drazinkit/drazin.hpp"
#include "drazinkit/intertwine.hpp"
#include "drazinkit/report.hpp"
#include "drazinkit/structure.hpp"
#include "drazinkit/testgen.hpp"

namespace drazinkit {

using json = nlohmann::json;

/// A matrix whose kernel is only known at run time.
using AnyMatrix = std::variant<ExactMatrix, FloatMatrix>;

// Matrix schema: {"kernel":"exact"|"float","rows":r,"cols":c,"entries":[[re,im],...]}
// row-major; exact re/im are "p/q" strings, float re/im are numbers.
// Every parser throws Error(Schema) on malformed input.

json to_json(const ExactMatrix& a);
json to_json(const FloatMatrix& a);
json to_json(const AnyMatrix& a);

AnyMatrix matrix_from_json(const json& j);

/// Throws Error(KernelMismatch) if the document's kernel is not T's.
template <KernelScalar T>
Matrix<T> matrix_from_json_as(const json& j);

FloatMatrix as_float(const AnyMatrix& a);
Kernel kernel_of(const AnyMatrix& a);

json to_json(const Report& r);
Report report_from_json(const json& j);

template <KernelScalar T>
json to_json(const DrazinData<T>& d);
template <KernelScalar T>
json to_json(const Decomposition<T>& d);
template <KernelScalar T>
json to_json(const SimilarityCertificate<T>& c);
template <KernelScalar T>
json to_json(const BlockTriple<T>& bt);
template <KernelScalar T>
json to_json(const IntertwiningInstance<T>& inst);

using AnyTriple = std::variant<BlockTriple<Gaussian>, BlockTriple<Complex>>;
using AnyInstance = std::variant<IntertwiningInstance<Gaussian>, IntertwiningInstance<Complex>>;

/// {"T","C","S"}; the three matrices must share a kernel, else
/// Error(KernelMismatch).
AnyTriple triple_from_json(const json& j);
/// {"T","A","B"}; same kernel rule.
AnyInstance instance_from_json(const json& j);

AnyTriple as_float(const AnyTriple& t);
AnyInstance as_float(const AnyInstance& t);

json to_json(const GenSpec& s);
/// Missing fields take GenSpec defaults.
GenSpec genspec_from_json(const json& j);

/// Reads and parses a JSON file; Error(Schema) on I/O or parse failure.
json read_json_file(const std::string& path);

}  // namespace drazinkit
