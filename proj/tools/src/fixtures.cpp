#include "drazinkit_cli/fixtures.hpp"

#include <algorithm>
#include <filesystem>

#include "drazinkit/json_io.hpp"

namespace drazinkit::cli {

namespace {

namespace fs = std::filesystem;

constexpr std::string_view kSidecarSuffix = ".expected.json";

struct Context {
  std::string fixture;
  std::string check;
  Tolerance tol;
  std::vector<FixtureOutcome>* out;

  void record(const std::string& what, bool passed, const std::string& message = "") const {
    out->push_back({fixture, check + ":" + what, passed, message});
  }
};

std::string bool_text(bool b) { return b ? "true" : "false"; }

void compare_verdicts(const Context& ctx, const Report& r, const json& expect, const std::string& prefix = "") {
  for (const auto& [name, value] : expect.items()) {
    const std::string key = prefix + name;
    if (!r.has(name)) {
      ctx.record(key, false, "no verdict named '" + name + "'");
      continue;
    }
    const bool got = r.verdict(name);
    const bool want = value.get<bool>();
    ctx.record(key, got == want, "expected " + bool_text(want) + ", got " + bool_text(got));
  }
}

// A check whose value is either a verdict object or the name of the error the
// call must raise.
template <class F>
void expect_report_or_error(const Context& ctx, const std::string& what, const json& expect, F&& call) {
  try {
    const Report r = call();
    if (expect.is_string()) {
      ctx.record(what, false, "expected error " + expect.get<std::string>() + ", call succeeded");
    } else {
      compare_verdicts(ctx, r, expect, what + ".");
    }
  } catch (const Error& e) {
    const std::string got(to_string(e.code()));
    if (expect.is_string()) {
      ctx.record(what, got == expect.get<std::string>(), "expected " + expect.get<std::string>() + ", got " + got);
    } else {
      if (is_precondition(e.code())) throw;
      ctx.record(what, false, std::string("unexpected error: ") + e.what());
    }
  }
}

template <KernelScalar T>
void check_matrix(const Context& ctx, const std::string& what, const Matrix<T>& got, const json& want) {
  const Matrix<T> ref = matrix_from_json_as<T>(want);
  if (got.rows() != ref.rows() || got.cols() != ref.cols()) {
    ctx.record(what, false, "shape " + got.shape() + " vs " + ref.shape());
    return;
  }
  const Matrix<T> diff = got - ref;
  bool ok;
  if constexpr (is_exact_v<T>) {
    ok = diff.is_zero();
  } else {
    ok = ctx.tol.passes(frobenius_norm(diff), frobenius_norm(ref));
  }
  ctx.record(what, ok, "residual " + std::to_string(frobenius_norm(diff)));
}

template <KernelScalar T>
void run_classify(const Context& ctx, const Matrix<T>& a, const json& check) {
  const ClassQuery q(check.value("n", 1u), check.value("m", 1u), ctx.tol);
  const Matrix<T> dinv = drazin_inverse(a).dinv;
  Report r(kernel_of_v<T>);
  r.merge(is_dn(a, dinv, q), "");
  r.merge(is_dqn(a, dinv, q), "");
  r.merge(is_normal(a, ctx.tol), "");
  compare_verdicts(ctx, r, check.value("expect", json::object()));
  if (check.contains("index")) {
    const std::size_t idx = drazin_index(a);
    ctx.record("index", idx == check.at("index").get<std::size_t>(), "got " + std::to_string(idx));
  }
}

template <KernelScalar T>
void run_drazin(const Context& ctx, const Matrix<T>& a, const json& check) {
  const DrazinData<T> d = drazin_inverse(a);
  if (check.contains("index")) {
    ctx.record("index", d.index == check.at("index").get<std::size_t>(), "got " + std::to_string(d.index));
  }
  if (check.contains("dinv")) check_matrix(ctx, "dinv", d.dinv, check.at("dinv"));
  const Report axioms = verify_drazin_axioms(a, d, ctx.tol);
  ctx.record("axioms", axioms.all());
}

template <KernelScalar T>
void run_block(const Context& ctx, const BlockTriple<T>& bt, const json& check) {
  const ClassQuery q(check.value("n", 1u), check.value("m", 1u), ctx.tol);
  const BlockDrazin<T> bd = block_drazin_inverse(bt);
  if (check.contains("x")) check_matrix(ctx, "x", bd.x, check.at("x"));
  check_matrix(ctx, "oracle", bd.dinv, to_json(drazin_inverse(assemble(bt)).dinv));
  if (check.contains("expect")) compare_verdicts(ctx, is_dn(assemble(bt), bd.dinv, q), check.at("expect"));
  if (check.contains("simple_pole")) {
    expect_report_or_error(ctx, "simple_pole", check.at("simple_pole"), [&] { return simple_pole_equivalence(bt, ctx.tol); });
  }
  if (check.contains("coupling_sufficiency")) {
    expect_report_or_error(ctx, "coupling_sufficiency", check.at("coupling_sufficiency"), [&] { return coupling_sufficiency(bt, q); });
  }
}

Hypothesis parse_hypothesis(const std::string& h) {
  if (h == "none") return Hypothesis::None;
  if (h == "reverse") return Hypothesis::Reverse;
  if (h == "drazin_skew") return Hypothesis::DrazinSkew;
  throw Error(ErrorCode::Schema, "unknown hypothesis '" + h + "'");
}

Orientation parse_orientation(const std::string& o) {
  if (o == "AT_eq_TB") return Orientation::AT_eq_TB;
  if (o == "TA_eq_BT") return Orientation::TA_eq_BT;
  throw Error(ErrorCode::Schema, "unknown orientation '" + o + "'");
}

template <KernelScalar T>
void run_intertwine(const Context& ctx, const IntertwiningInstance<T>& inst, const json& check) {
  const Hypothesis h = parse_hypothesis(check.value("hypothesis", std::string("none")));
  const Orientation o = parse_orientation(check.value("orientation", std::string("AT_eq_TB")));
  expect_report_or_error(ctx, "extended_commutativity", check.value("expect", json::object()),
                         [&] { return extended_commutativity(inst, h, ctx.tol, o); });
}

void run_check(const Context& ctx, const json& doc, const json& check) {
  const std::string kind = check.value("kind", std::string());
  if (kind == "classify" || kind == "drazin") {
    // intertwining documents classify their operator T
    const json& mj = doc.contains("T") && !doc.contains("entries") ? doc.at("T") : doc;
    std::visit(
        [&](const auto& a) {
          if (kind == "classify") {
            run_classify(ctx, a, check);
          } else {
            run_drazin(ctx, a, check);
          }
        },
        matrix_from_json(mj));
  } else if (kind == "block") {
    std::visit([&](const auto& bt) { run_block(ctx, bt, check); }, triple_from_json(doc));
  } else if (kind == "intertwine") {
    std::visit([&](const auto& inst) { run_intertwine(ctx, inst, check); }, instance_from_json(doc));
  } else {
    throw Error(ErrorCode::Schema, "unknown check kind '" + kind + "'");
  }
}

}  // namespace

std::vector<FixtureOutcome> verify_fixtures(const std::string& dir, Tolerance tol) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Error(ErrorCode::Schema, "fixture directory '" + dir + "' not found");
  std::vector<fs::path> sidecars;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.size() > kSidecarSuffix.size() && name.ends_with(kSidecarSuffix)) sidecars.push_back(entry.path());
  }
  std::sort(sidecars.begin(), sidecars.end());

  std::vector<FixtureOutcome> out;
  for (const fs::path& sidecar : sidecars) {
    const std::string file = sidecar.filename().string();
    const std::string stem = file.substr(0, file.size() - kSidecarSuffix.size());
    const json doc = read_json_file((sidecar.parent_path() / (stem + ".json")).string());
    const json expected = read_json_file(sidecar.string());
    if (!expected.contains("checks") || !expected.at("checks").is_array()) {
      throw Error(ErrorCode::Schema, file + ": needs a \"checks\" array");
    }
    std::size_t k = 0;
    for (const json& check : expected.at("checks")) {
      const Context ctx{stem, std::to_string(k++) + "." + check.value("kind", std::string("?")), tol, &out};
      try {
        run_check(ctx, doc, check);
      } catch (const json::exception& e) {
        throw Error(ErrorCode::Schema, file + ": " + e.what());
      } catch (const Error& e) {
        if (e.code() == ErrorCode::Schema || e.code() == ErrorCode::KernelMismatch || is_precondition(e.code())) throw;
        ctx.record("run", false, e.what());
      }
    }
  }
  return out;
}

}  // namespace drazinkit::cli
