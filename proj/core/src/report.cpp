#include "drazinkit/report.hpp"

namespace drazinkit {

bool Report::verdict(const std::string& name) const {
  const auto it = verdicts_.find(name);
  if (it == verdicts_.end()) throw Error(ErrorCode::InvalidArgument, "no verdict named '" + name + "'");
  return it->second;
}

double Report::residual(const std::string& name) const {
  const auto it = residuals_.find(name);
  if (it == residuals_.end()) throw Error(ErrorCode::InvalidArgument, "no residual named '" + name + "'");
  return it->second;
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& [name, v] : other.verdicts_) add(prefix + name, v, other.residuals_.at(name));
}

}  // namespace drazinkit
