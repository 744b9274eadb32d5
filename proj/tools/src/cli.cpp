#include "drazinkit_cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "drazinkit/json_io.hpp"
#include "drazinkit_cli/campaign.hpp"
#include "drazinkit_cli/fixtures.hpp"

namespace drazinkit::cli {

namespace {

struct Options {
  std::string input;
  unsigned n = 1;
  unsigned m = 1;
  double tol = 1e-9;
  bool as_json = false;
  bool force_float = false;
  std::string fixtures;
  std::string manifest;
  unsigned jobs = 1;
  std::string out_path;
};

Tolerance tolerance(const Options& o) { return Tolerance{0.0, o.tol}; }

json tolerance_json(const Options& o) { return {{"abs", 0.0}, {"rel", o.tol}}; }

bool is_matrix(const json& j) { return j.is_object() && j.contains("entries") && j.contains("rows"); }

std::string entry_text(const json& e) {
  std::ostringstream s;
  if (e[0].is_string()) {
    s << e[0].get<std::string>();
    const std::string im = e[1].get<std::string>();
    if (im != "0/1") s << (im.front() == '-' ? "" : "+") << im << "i";
  } else {
    s << std::setprecision(6) << e[0].get<double>();
    const double im = e[1].get<double>();
    if (im != 0.0) s << std::showpos << im << std::noshowpos << "i";
  }
  return s.str();
}

// Human rendering of the same document the --json output prints.
void render(std::ostream& out, const json& j, const std::string& indent = "") {
  for (const auto& [key, value] : j.items()) {
    if (is_matrix(value)) {
      const auto rows = value.at("rows").get<std::size_t>();
      const auto cols = value.at("cols").get<std::size_t>();
      out << indent << key << ": " << rows << "x" << cols << " " << value.at("kernel").get<std::string>() << "\n";
      for (std::size_t i = 0; i < rows; ++i) {
        out << indent << "  [";
        for (std::size_t c = 0; c < cols; ++c) out << (c ? ", " : "") << entry_text(value.at("entries")[i * cols + c]);
        out << "]\n";
      }
    } else if (value.is_object()) {
      out << indent << key << ":\n";
      render(out, value, indent + "  ");
    } else {
      out << indent << key << ": " << value.dump() << "\n";
    }
  }
}

void emit(std::ostream& out, const Options& o, const json& doc) {
  if (o.as_json) {
    out << doc.dump(2) << "\n";
  } else {
    render(out, doc);
  }
}

AnyMatrix load_matrix(const Options& o) {
  AnyMatrix a = matrix_from_json(read_json_file(o.input));
  if (o.force_float) a = as_float(a);
  return a;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const ClassQuery q(o.n, o.m, tolerance(o));
  const json doc = std::visit(
      [&](const auto& a) {
        const auto dinv = drazin_inverse(a).dinv;
        Report r(kernel_of(AnyMatrix(a)));
        r.merge(is_normal(a, q.tol), "");
        r.merge(is_dn(a, dinv, q), "");
        r.merge(is_dqn(a, dinv, q), "");
        r.merge(is_m_partial_isometry(a, q.m, q.tol), "");
        return json{{"kernel", std::string(to_string(r.kernel()))},
                    {"tolerance", tolerance_json(o)},
                    {"n", q.n},
                    {"m", q.m},
                    {"index", drazin_index(a)},
                    {"report", to_json(r)}};
      },
      load_matrix(o));
  emit(out, o, doc);
  return kOk;
}

int cmd_drazin(const Options& o, std::ostream& out) {
  const json doc = std::visit(
      [&](const auto& a) {
        const auto d = drazin_inverse(a);
        return json{{"tolerance", tolerance_json(o)},
                    {"drazin", to_json(d)},
                    {"axioms", to_json(verify_drazin_axioms(a, d, tolerance(o)))}};
      },
      load_matrix(o));
  emit(out, o, doc);
  return kOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const json doc = std::visit(
      [&](const auto& a) { return json{{"tolerance", tolerance_json(o)}, {"decomposition", to_json(core_nilpotent(a))}}; },
      load_matrix(o));
  emit(out, o, doc);
  return kOk;
}

template <class F>
json report_or_reason(F&& call) {
  try {
    return to_json(call());
  } catch (const Error& e) {
    if (!is_precondition(e.code())) throw;
    return json{{"skipped", std::string(to_string(e.code()))}, {"reason", e.what()}};
  }
}

int cmd_block(const Options& o, std::ostream& out) {
  AnyTriple triple = triple_from_json(read_json_file(o.input));
  if (o.force_float) triple = as_float(triple);
  const ClassQuery q(o.n, o.m, tolerance(o));
  const json doc = std::visit(
      [&](const auto& bt) {
        const auto bd = block_drazin_inverse(bt);
        return json{{"tolerance", tolerance_json(o)},
                    {"index_t", bd.index_t},
                    {"index_s", bd.index_s},
                    {"dinv", to_json(bd.dinv)},
                    {"x", to_json(bd.x)},
                    {"dn", to_json(is_dn(assemble(bt), bd.dinv, q))},
                    {"simple_pole", report_or_reason([&] { return simple_pole_equivalence(bt, q.tol); })},
                    {"coupling_sufficiency", report_or_reason([&] { return coupling_sufficiency(bt, q); })}};
      },
      triple);
  emit(out, o, doc);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const std::vector<FixtureOutcome> results = verify_fixtures(o.fixtures, tolerance(o));
  std::size_t failed = 0;
  json list = json::array();
  for (const FixtureOutcome& r : results) {
    failed += r.passed ? 0 : 1;
    list.push_back({{"fixture", r.fixture}, {"check", r.check}, {"passed", r.passed}, {"message", r.message}});
  }
  if (o.as_json) {
    out << json{{"tolerance", tolerance_json(o)}, {"results", list}, {"failed", failed}}.dump(2) << "\n";
  } else {
    for (const FixtureOutcome& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.fixture << " " << r.check;
      if (!r.passed && !r.message.empty()) out << " (" << r.message << ")";
      out << "\n";
    }
    out << results.size() - failed << "/" << results.size() << " checks passed\n";
  }
  return failed == 0 ? kOk : kMismatch;
}

std::optional<std::uint64_t> seed_from_env() {
  const char* raw = std::getenv("DRAZINKIT_SEED");
  if (!raw || !*raw) return std::nullopt;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(raw, &used, 0);
    if (used != std::string(raw).size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, std::string("DRAZINKIT_SEED is not an integer: ") + raw);
  }
}

int cmd_campaign(const Options& o, std::ostream& out, std::ostream& err) {
  const Manifest manifest = manifest_from_json(read_json_file(o.manifest));
  std::ofstream file;
  if (!o.out_path.empty()) {
    file.open(o.out_path, std::ios::app);
    if (!file) throw Error(ErrorCode::Schema, "cannot open '" + o.out_path + "' for writing");
  }
  std::ostream& sink = o.out_path.empty() ? out : file;
  const CampaignSummary s = run_campaign(manifest, o.jobs, sink, seed_from_env());
  std::ostream& summary = o.out_path.empty() ? err : out;
  summary << "campaign: " << s.evaluated - s.failed << "/" << s.evaluated << " passed (prng "
          << SplitMix64::algorithm << ", tolerance rel " << o.tol << ")\n";
  return s.failed == 0 ? kOk : kMismatch;
}

int exit_code_for(const Error& e) {
  if (is_precondition(e.code())) return kPrecondition;
  return kIoOrSchema;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Drazin inverses and power D-normal classes of complex matrices", "drazinkit"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "relative tolerance for float verdicts")->check(CLI::PositiveNumber);
    sub->add_flag("--json", o.as_json, "print JSON instead of text");
  };
  auto class_flags = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "power of the Drazin inverse")->check(CLI::PositiveNumber);
    sub->add_option("--m", o.m, "power of the adjoint")->check(CLI::PositiveNumber);
  };

  CLI::App* classify = app.add_subcommand("classify", "classify a matrix");
  classify->add_option("input", o.input, "matrix JSON file")->required();
  class_flags(classify);
  common(classify);
  classify->add_flag("--force-float", o.force_float, "convert exact input to the float kernel");

  CLI::App* drazin = app.add_subcommand("drazin", "Drazin inverse, index and spectral idempotent");
  drazin->add_option("input", o.input, "matrix JSON file")->required();
  common(drazin);
  drazin->add_flag("--force-float", o.force_float, "convert exact input to the float kernel");

  CLI::App* decompose = app.add_subcommand("decompose", "core-nilpotent decomposition");
  decompose->add_option("input", o.input, "matrix JSON file")->required();
  common(decompose);
  decompose->add_flag("--force-float", o.force_float, "convert exact input to the float kernel");

  CLI::App* block = app.add_subcommand("block", "upper-triangular block operator [[T, C], [0, S]]");
  block->add_option("input", o.input, "block triple JSON file")->required();
  class_flags(block);
  common(block);
  block->add_flag("--force-float", o.force_float, "convert exact input to the float kernel");

  CLI::App* verify = app.add_subcommand("verify", "check fixtures against their expected verdicts");
  verify->add_option("--fixtures", o.fixtures, "fixture directory")->required();
  common(verify);

  CLI::App* campaign = app.add_subcommand("campaign", "run seeded property campaigns");
  campaign->add_option("--manifest", o.manifest, "campaign manifest JSON")->required();
  campaign->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  campaign->add_option("--out", o.out_path, "append JSON lines here instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    const std::string help = app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help();
    err << e.what() << "\n" << help;
    return kIoOrSchema;
  }

  try {
    if (classify->parsed()) return cmd_classify(o, out);
    if (drazin->parsed()) return cmd_drazin(o, out);
    if (decompose->parsed()) return cmd_decompose(o, out);
    if (block->parsed()) return cmd_block(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    return cmd_campaign(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace drazinkit::cli
