#include "drazinkit_cli/campaign.hpp"

#include <atomic>
#include <mutex>
#include <thread>

#include "drazinkit/structure.hpp"

namespace drazinkit::cli {

namespace {

using Evaluator = PropertyOutcome (*)(const GenSpec&, const ClassQuery&, std::uint64_t);

PropertyOutcome from_report(const Report& r, const std::string& key = "") {
  return {key.empty() ? r.all() : r.verdict(key), to_json(r)};
}

template <KernelScalar T>
PropertyOutcome drazin_axioms(const GenSpec& s, const ClassQuery& q, std::uint64_t) {
  const Matrix<T> a = gen_drazin_matrix<T>(s);
  return from_report(verify_drazin_axioms(a, drazin_inverse(a), q.tol));
}

template <KernelScalar T>
PropertyOutcome block_oracle(const GenSpec& s, const ClassQuery& q, std::uint64_t) {
  const BlockTriple<T> bt = gen_random_triple<T>(s);
  const Matrix<T> reference = drazin_inverse(assemble(bt)).dinv;
  Report r(kernel_of_v<T>);
  r.check("oracle", block_drazin_inverse(bt).dinv - reference, frobenius_norm(reference), q.tol);
  return from_report(r);
}

template <KernelScalar T>
PropertyOutcome dn_dqn_agree(const GenSpec& s, const ClassQuery& q, std::uint64_t k) {
  const Matrix<T> a = k % 2 == 0 ? gen_dn_rotated<T>(s, q) : gen_drazin_matrix<T>(s);
  const Matrix<T> dinv = drazin_inverse(a).dinv;
  Report r(kernel_of_v<T>);
  for (unsigned n = 1; n <= 3; ++n) {
    for (unsigned m = 1; m <= 3; ++m) {
      const ClassQuery c(n, m, q.tol);
      const std::string tag = std::to_string(n) + "_" + std::to_string(m);
      r.flag("agree_" + tag, is_dn(a, dinv, c).verdict("dn") == is_dqn(a, dinv, c).verdict("dqn"));
    }
  }
  return from_report(r);
}

template <KernelScalar T>
PropertyOutcome simple_pole(const GenSpec& s, const ClassQuery& q, std::uint64_t k) {
  GenSpec simple = s;
  simple.index_cap = std::min<std::size_t>(s.index_cap, 1);
  const BlockTriple<T> bt = gen_block_triple<T>(simple, ClassQuery(1, 1, q.tol), k % 2 == 0);
  return from_report(simple_pole_equivalence(bt, q.tol), "equivalent");
}

template <KernelScalar T>
PropertyOutcome coupling(const GenSpec& s, const ClassQuery& q, std::uint64_t) {
  const Report r = coupling_sufficiency(gen_block_triple<T>(s, q, true), q);
  return {r.verdict("dn") && r.verdict("x_zero"), to_json(r)};
}

template <KernelScalar T, Hypothesis H>
PropertyOutcome extended(const GenSpec& s, const ClassQuery& q, std::uint64_t) {
  return from_report(extended_commutativity(gen_intertwining<T>(s, H), H, q.tol), "conclusion");
}

template <KernelScalar T>
PropertyOutcome fuglede(const GenSpec& s, const ClassQuery& q, std::uint64_t) {
  const Matrix<T> t = gen_dn_rotated<T>(s, ClassQuery(1, 1, q.tol));
  const Matrix<T> x = gen_commuting_with(t, s.child(0xF0));
  return from_report(fuglede_drazin(t, x, q), "transfer");
}

template <KernelScalar T>
PropertyOutcome certificate(const GenSpec& s, const ClassQuery& q, std::uint64_t) {
  const Matrix<T> a = gen_dn_rotated<T>(s, q);
  const SimilarityCertificate<T> cert = similarity_to_normal(a, q);
  Tolerance tol = q.tol;
  tol.rel = std::max(tol.rel, 1e-8);
  const Report r = verify_certificate(drazin_inverse(a).dinv, cert, tol);
  json detail = to_json(r);
  detail["certificate_residual"] = cert.residual;
  return {r.all(), detail};
}

template <KernelScalar T>
PropertyOutcome partial_isometry(const GenSpec& s, const ClassQuery& q, std::uint64_t) {
  const Report r = partial_isometry_structure(gen_partial_isometry_contraction<T>(s), q);
  return {r.verdict("core_unitary") && r.verdict("dn_1_1"), to_json(r)};
}

template <KernelScalar T>
PropertyOutcome intersection(const GenSpec& s, const ClassQuery& q, std::uint64_t k) {
  // members of [(1,m)DN] lie in every [(j,m)DN]; dually for [(n,1)DN]
  const bool dual = k % 2 == 1;
  const ClassQuery base = dual ? ClassQuery(q.n, 1, q.tol) : ClassQuery(1, q.m, q.tol);
  const Matrix<T> a = gen_dn_rotated<T>(s, base);
  const Matrix<T> dinv = drazin_inverse(a).dinv;
  Report r(kernel_of_v<T>);
  for (unsigned j = 1; j <= 6; ++j) {
    const ClassQuery c = dual ? ClassQuery(base.n, j, q.tol) : ClassQuery(j, base.m, q.tol);
    r.flag("k_" + std::to_string(j), is_dn(a, dinv, c).verdict("dn"));
  }
  return from_report(r);
}

template <KernelScalar T>
PropertyOutcome quasiaffinity(const GenSpec& s, const ClassQuery& q, std::uint64_t) {
  const QuasiaffinityInstance<T> inst = gen_quasiaffinity<T>(s, q);
  return from_report(quasiaffinity_similarity(inst.s, inst.t, inst.x, q));
}

template <KernelScalar T>
PropertyOutcome core_restriction(const GenSpec& s, const ClassQuery& q, std::uint64_t k) {
  const Matrix<T> a = k % 2 == 0 ? gen_dn_rotated<T>(s, q) : gen_drazin_matrix<T>(s);
  return from_report(core_restriction_equivalence(a, q), "equivalent");
}

struct Property {
  std::string name;
  Evaluator exact;
  Evaluator real;
};

const std::vector<Property>& registry() {
  static const std::vector<Property> props = {
      {"drazin_axioms", drazin_axioms<Gaussian>, drazin_axioms<Complex>},
      {"block_oracle", block_oracle<Gaussian>, block_oracle<Complex>},
      {"dn_dqn_agree", dn_dqn_agree<Gaussian>, dn_dqn_agree<Complex>},
      {"simple_pole_equivalence", simple_pole<Gaussian>, simple_pole<Complex>},
      {"coupling_sufficiency", coupling<Gaussian>, coupling<Complex>},
      {"extended_commutativity_reverse", extended<Gaussian, Hypothesis::Reverse>,
       extended<Complex, Hypothesis::Reverse>},
      {"extended_commutativity_drazin_skew", extended<Gaussian, Hypothesis::DrazinSkew>,
       extended<Complex, Hypothesis::DrazinSkew>},
      {"fuglede_transfer", fuglede<Gaussian>, fuglede<Complex>},
      {"similarity_certificate", certificate<Gaussian>, certificate<Complex>},
      {"partial_isometry_structure", partial_isometry<Gaussian>, partial_isometry<Complex>},
      {"intersection", intersection<Gaussian>, intersection<Complex>},
      {"quasiaffinity_similarity", quasiaffinity<Gaussian>, quasiaffinity<Complex>},
      {"core_restriction", core_restriction<Gaussian>, core_restriction<Complex>},
  };
  return props;
}

const Property* find_property(const std::string& name) {
  for (const Property& p : registry())
    if (p.name == name) return &p;
  return nullptr;
}

struct Task {
  std::size_t entry;
  std::uint64_t instance;
  std::size_t property;
};

}  // namespace

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Property& p : registry()) out.push_back(p.name);
    return out;
  }();
  return names;
}

Manifest manifest_from_json(const json& j) {
  if (!j.is_object() || !j.contains("campaigns") || !j.at("campaigns").is_array()) {
    throw Error(ErrorCode::Schema, "manifest needs a \"campaigns\" array");
  }
  Manifest m;
  for (const json& c : j.at("campaigns")) {
    CampaignEntry e;
    try {
      e.spec = genspec_from_json(c.value("spec", json::object()));
      e.count = c.value("count", std::size_t{1});
      if (c.contains("n")) e.n = c.at("n").get<unsigned>();
      if (c.contains("m")) e.m = c.at("m").get<unsigned>();
      if (c.contains("tol")) e.tol.rel = c.at("tol").get<double>();
      if (!c.contains("properties") || !c.at("properties").is_array()) {
        throw Error(ErrorCode::Schema, "campaign needs a \"properties\" array");
      }
      for (const json& p : c.at("properties")) e.properties.push_back(p.get<std::string>());
    } catch (const json::exception& ex) {
      throw Error(ErrorCode::Schema, std::string("manifest: ") + ex.what());
    }
    if ((e.n && *e.n == 0) || (e.m && *e.m == 0)) throw Error(ErrorCode::Schema, "n and m must be >= 1");
    for (const std::string& p : e.properties) {
      if (!find_property(p)) throw Error(ErrorCode::Schema, "unknown property '" + p + "'");
    }
    m.campaigns.push_back(std::move(e));
  }
  return m;
}

PropertyOutcome evaluate_property(const std::string& name, const GenSpec& spec, const ClassQuery& q,
                                  std::uint64_t instance) {
  const Property* p = find_property(name);
  if (!p) throw Error(ErrorCode::InvalidArgument, "unknown property '" + name + "'");
  try {
    return (spec.kernel == Kernel::Exact ? p->exact : p->real)(spec, q, instance);
  } catch (const Error& e) {
    return {false, json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}};
  }
}

CampaignSummary run_campaign(const Manifest& manifest, unsigned jobs, std::ostream& out,
                             std::optional<std::uint64_t> seed_override) {
  std::vector<Task> tasks;
  for (std::size_t e = 0; e < manifest.campaigns.size(); ++e) {
    const CampaignEntry& c = manifest.campaigns[e];
    for (std::uint64_t k = 0; k < c.count; ++k)
      for (std::size_t p = 0; p < c.properties.size(); ++p) tasks.push_back({e, k, p});
  }

  std::mutex lock;
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> failed{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& t = tasks[i];
      const CampaignEntry& c = manifest.campaigns[t.entry];
      GenSpec base = c.spec;
      if (seed_override) base.seed = *seed_override;
      GenSpec spec = base.child(t.instance);
      SplitMix64 rng(spec.seed ^ 0xC0FFEEULL);
      spec.size = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(base.size)));
      const unsigned n = c.n.value_or(static_cast<unsigned>(rng.uniform_int(1, 3)));
      const unsigned m = c.m.value_or(static_cast<unsigned>(rng.uniform_int(1, 3)));
      const std::string& name = c.properties[t.property];
      const PropertyOutcome outcome = evaluate_property(name, spec, ClassQuery(n, m, c.tol), t.instance);
      if (!outcome.passed) ++failed;

      const json line = {{"campaign", t.entry}, {"instance", t.instance}, {"property", name},
                         {"spec", to_json(spec)}, {"n", n},                {"m", m},
                         {"passed", outcome.passed}, {"detail", outcome.detail}};
      const std::string text = line.dump() + "\n";
      std::lock_guard<std::mutex> guard(lock);
      out << text << std::flush;
    }
  };

  const unsigned workers = std::max(1u, jobs);
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();
  return {tasks.size(), failed.load()};
}

}  // namespace drazinkit::cli
