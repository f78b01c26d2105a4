#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "aqecc/serialize.hpp"
#include "aqecc/tables.hpp"
#include "aqecc/verify.hpp"

namespace {

using aqecc::Json;

struct GlobalOpts {
  std::uint64_t budget = 1ull << 26;
  unsigned threads = 1;
  std::uint64_t seed = 18781729;

  aqecc::Budget to_budget() const { return aqecc::Budget{budget, threads}; }
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

aqecc::LinearCode read_code(const std::string& path) {
  Json j = read_json_file(path);
  if (j.contains("code")) j = j.at("code");
  return aqecc::code_from_json(j);
}

aqecc::CssPair read_pair(const std::string& path) {
  Json j = read_json_file(path);
  if (j.contains("pair") && !j.at("pair").is_null()) j = j.at("pair");
  return aqecc::pair_from_json(j);
}

aqecc::FieldBasis parse_basis(const std::string& spec, const aqecc::TowerPtr& tower) {
  if (spec == "polynomial") return aqecc::FieldBasis::polynomial(tower);
  if (spec == "dual-of-polynomial")
    return aqecc::FieldBasis::polynomial(tower).dual();
  if (spec == "normal") return aqecc::FieldBasis::normal(tower);
  std::vector<aqecc::GfElem> elems;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ','))
    elems.push_back(static_cast<aqecc::GfElem>(std::stoul(tok)));
  return aqecc::FieldBasis(tower, elems);
}

int status_exit(aqecc::ClaimStatus s) {
  switch (s) {
    case aqecc::ClaimStatus::verified_exact:
    case aqecc::ClaimStatus::verified_bound:
      return 0;
    case aqecc::ClaimStatus::budget_exceeded:
      return 2;
    case aqecc::ClaimStatus::hypothesis_failed:
      return 3;
    case aqecc::ClaimStatus::violated:
      return 1;
  }
  return 1;
}

struct Outcome {
  Json result;
  int exit_code = 0;
};

void emit(const GlobalOpts& g, const std::string& command, const Json& inputs,
          const Outcome& out,
          std::chrono::steady_clock::time_point started) {
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  Json manifest{{"command", command},
                {"inputs", inputs},
                {"seed", g.seed},
                {"budget", g.budget},
                {"threads", g.threads},
                {"outputs", Json{{"exit", out.exit_code}}},
                {"wall_clock_ms", elapsed}};
  Json doc{{"manifest", std::move(manifest)}, {"result", out.result}};
  std::cout << doc.dump(1) << "\n";
}

Json code_bundle(const aqecc::LinearCode& c, const aqecc::Budget& budget) {
  Json reports = Json::array();
  reports.push_back(aqecc::weight_report_to_json(aqecc::min_distance(c, budget)));
  return Json{{"code", aqecc::code_to_json(c)}, {"reports", std::move(reports)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"asymmetric quantum code workbench"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--budget", g.budget, "max codewords any oracle may enumerate");
  app.add_option("--threads", g.threads, "worker threads for oracle scans");
  app.add_option("--seed", g.seed, "seed for randomized verification suites");

  // ---- code ----
  auto* code = app.add_subcommand("code", "build a classical code");
  code->require_subcommand(1);
  std::uint64_t arg_q = 2;
  std::uint32_t arg_m = 1, arg_alpha = 0, arg_r = 0, arg_delta = 2, arg_b = 1,
                arg_p = 3;
  std::size_t arg_n = 7, arg_i = 0;
  std::string arg_in, arg_a, arg_bfile, arg_op;

  auto* cg = code->add_subcommand("grm", "generalized Reed-Muller code");
  cg->add_option("--q", arg_q)->required();
  cg->add_option("--m", arg_m)->required();
  cg->add_option("--alpha", arg_alpha)->required();

  auto* cc = code->add_subcommand("character", "elementary 2-group character code");
  cc->add_option("--q", arg_q)->required();
  cc->add_option("--r", arg_r)->required();
  cc->add_option("--m", arg_m)->required();

  auto* cb = code->add_subcommand("bch", "BCH code with a designed distance");
  cb->add_option("--q", arg_q)->required();
  cb->add_option("--n", arg_n)->required();
  cb->add_option("--delta", arg_delta)->required();
  cb->add_option("--b", arg_b);

  auto* cq = code->add_subcommand("qr", "quadratic residue codes");
  cq->add_option("--p", arg_p)->required();
  cq->add_option("--q", arg_q)->required();

  auto* ct = code->add_subcommand("transform", "puncture / shorten / extend");
  ct->add_option("--op", arg_op)->required()->check(
      CLI::IsMember({"puncture", "shorten", "extend"}));
  ct->add_option("--in", arg_in)->required();
  ct->add_option("--i", arg_i);

  auto* cm = code->add_subcommand("combine", "direct-sum / uuv of two codes");
  cm->add_option("--op", arg_op)->required()->check(
      CLI::IsMember({"direct-sum", "uuv"}));
  cm->add_option("--a", arg_a)->required();
  cm->add_option("--b", arg_bfile)->required();

  // ---- aqecc ----
  auto* aq = app.add_subcommand("aqecc", "derive asymmetric quantum codes");
  aq->require_subcommand(1);
  std::string arg_c1, arg_c2, arg_pair, arg_pa, arg_pb, arg_basis = "polynomial";
  std::uint64_t arg_subfield = 0;

  auto* ac = aq->add_subcommand("css", "CSS construction from nested codes");
  ac->add_option("--c1", arg_c1)->required();
  ac->add_option("--c2", arg_c2)->required();

  auto* ae = aq->add_subcommand("expand", "basis expansion to a subfield");
  ae->add_option("--pair", arg_pair)->required();
  ae->add_option("--basis", arg_basis);
  ae->add_option("--subfield", arg_subfield, "bottom field size (default: prime)");

  auto* ad = aq->add_subcommand("direct-sum", "direct sum of two pairs");
  ad->add_option("--pair-a", arg_pa)->required();
  ad->add_option("--pair-b", arg_pb)->required();

  auto* ap = aq->add_subcommand("puncture", "puncture a pair at a coordinate");
  ap->add_option("--pair", arg_pair)->required();
  ap->add_option("--i", arg_i)->required();

  auto* ax = aq->add_subcommand("extend", "extend a pair by a parity coordinate");
  ax->add_option("--pair", arg_pair)->required();

  auto* au = aq->add_subcommand("uuv", "(u|u+v) of two same-length pairs");
  au->add_option("--pair-a", arg_pa)->required();
  au->add_option("--pair-b", arg_pb)->required();

  // ---- table ----
  auto* tb = app.add_subcommand("table", "emit family table rows");
  std::string arg_family, arg_format = "csv";
  aqecc::TableCaps caps;
  std::uint64_t arg_only_q = 0;
  tb->add_option("--family", arg_family)->required();
  tb->add_option("--format", arg_format)->check(CLI::IsMember({"csv", "json"}));
  tb->add_option("--max-m", caps.max_m);
  tb->add_option("--max-p", caps.max_p);
  tb->add_option("--max-n", caps.max_n);
  tb->add_option("--max-q", caps.max_q);
  tb->add_option("--q", arg_only_q, "restrict rows to one alphabet");

  // ---- verify ----
  auto* vf = app.add_subcommand("verify", "run a verification suite");
  std::string arg_suite;
  std::uint64_t arg_max_q = 64;
  vf->add_option("suite", arg_suite, "suite name or 'all'")->required();
  vf->add_option("--max-q", arg_max_q, "field-axioms exhaustive cap");

  CLI11_PARSE(app, argc, argv);
  auto started = std::chrono::steady_clock::now();

  std::string command;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) command += ' ';
    command += argv[i];
  }

  try {
    Outcome out;
    Json inputs = Json::object();
    const aqecc::Budget budget = g.to_budget();

    auto field_of = [](std::uint64_t q) {
      for (std::uint32_t p = 2; p <= q; ++p) {
        std::uint64_t v = q;
        std::uint32_t t = 0;
        while (v % p == 0) v /= p, ++t;
        if (v == 1) return aqecc::FiniteField::make(p, t);
        if (q % p == 0) break;
      }
      throw std::invalid_argument("q must be a prime power");
    };

    if (cg->parsed()) {
      inputs = {{"q", arg_q}, {"m", arg_m}, {"alpha", arg_alpha}};
      auto field = field_of(arg_q);
      auto [c, spec] = aqecc::grm(field, arg_m, arg_alpha);
      out.result = code_bundle(c, budget);
      out.result["spec"] = Json{{"q", spec.q},
                                {"m", spec.m},
                                {"alpha", spec.alpha},
                                {"predicted_k", spec.predicted_k},
                                {"predicted_d", spec.predicted_d},
                                {"alpha_dual", spec.alpha_dual}};
      emit(g, command, inputs, out, started);
      return out.exit_code;
    }
    if (cc->parsed()) {
      inputs = {{"q", arg_q}, {"r", arg_r}, {"m", arg_m}};
      auto c = aqecc::character_code(field_of(arg_q), arg_r, arg_m);
      out.result = code_bundle(c, budget);
      out.result["spec"] =
          Json{{"q", arg_q},
               {"r", arg_r},
               {"m", arg_m},
               {"predicted_k", aqecc::character_dimension(arg_m, arg_r)},
               {"predicted_d", 1u << (arg_m - arg_r)}};
      emit(g, command, inputs, out, started);
      return out.exit_code;
    }
    if (cb->parsed()) {
      inputs = {{"q", arg_q}, {"n", arg_n}, {"delta", arg_delta}, {"b", arg_b}};
      auto [c, spec] = aqecc::bch(field_of(arg_q), arg_n, arg_b, arg_delta);
      out.result = code_bundle(c, budget);
      Json cosets = Json::array();
      for (const auto& cs : spec.cosets) cosets.push_back(cs);
      out.result["spec"] = Json{{"q", spec.q},
                                {"n", spec.n},
                                {"b", spec.b},
                                {"delta", spec.delta},
                                {"splitting_degree", spec.splitting_degree},
                                {"cosets", std::move(cosets)},
                                {"gen_poly", spec.gen_poly}};
      emit(g, command, inputs, out, started);
      return out.exit_code;
    }
    if (cq->parsed()) {
      inputs = {{"p", arg_p}, {"q", arg_q}};
      auto codes = aqecc::qr(arg_p, field_of(arg_q));
      const char* names[] = {"Q", "Q0", "C", "C0"};
      out.result = Json::object();
      for (int i = 0; i < 4; ++i)
        out.result[names[i]] = code_bundle(codes.codes[i], budget);
      emit(g, command, inputs, out, started);
      return out.exit_code;
    }
    if (ct->parsed()) {
      inputs = {{"op", arg_op}, {"in", arg_in}, {"i", arg_i}};
      aqecc::LinearCode c = read_code(arg_in);
      aqecc::LinearCode res = arg_op == "puncture" ? aqecc::puncture(c, arg_i)
                              : arg_op == "shorten" ? aqecc::shorten(c, arg_i)
                                                    : aqecc::extend(c);
      out.result = code_bundle(res, budget);
      emit(g, command, inputs, out, started);
      return out.exit_code;
    }
    if (cm->parsed()) {
      inputs = {{"op", arg_op}, {"a", arg_a}, {"b", arg_bfile}};
      aqecc::LinearCode a = read_code(arg_a), b = read_code(arg_bfile);
      aqecc::LinearCode res =
          arg_op == "direct-sum" ? aqecc::direct_sum(a, b) : aqecc::uuv(a, b);
      out.result = code_bundle(res, budget);
      emit(g, command, inputs, out, started);
      return out.exit_code;
    }

    if (ac->parsed()) {
      inputs = {{"c1", arg_c1}, {"c2", arg_c2}};
      aqecc::CssPair pair(read_code(arg_c1), read_code(arg_c2));
      aqecc::AqeccParams params = aqecc::derive(pair, budget);
      out.result = Json{{"pair", aqecc::pair_to_json(pair)},
                        {"params", aqecc::params_to_json(params)}};
      out.exit_code = (params.dz.exact && params.dx.exact) ? 0 : 2;
      emit(g, command, inputs, out, started);
      return out.exit_code;
    }
    if (ae->parsed()) {
      inputs = {{"pair", arg_pair}, {"basis", arg_basis}, {"subfield", arg_subfield}};
      aqecc::CssPair pair = read_pair(arg_pair);
      auto top = pair.c1().field();
      aqecc::FieldPtr bottom;
      if (arg_subfield == 0) {
        bottom = aqecc::FiniteField::make(top->p(), 1);
      } else {
        std::uint32_t s = 0;
        std::uint64_t v = arg_subfield;
        while (v % top->p() == 0) v /= top->p(), ++s;
        if (v != 1 || s == 0 || top->m() % s != 0)
          throw std::invalid_argument("subfield must be a power of p dividing q^m");
        bottom = aqecc::FiniteField::make(top->p(), s);
      }
      auto tower = aqecc::FieldTower::make(bottom, top);
      auto basis = parse_basis(arg_basis, tower);
      auto der = aqecc::expand_aqecc(pair, basis, budget);
      out.result = aqecc::derivation_to_json(der);
      out.exit_code = status_exit(der.claim.status);
      emit(g, command, inputs, out, started);
      return out.exit_code;
    }
    if (ad->parsed() || au->parsed()) {
      inputs = {{"pair_a", arg_pa}, {"pair_b", arg_pb}};
      aqecc::CssPair a = read_pair(arg_pa), b = read_pair(arg_pb);
      auto der = ad->parsed() ? aqecc::direct_sum_aqecc(a, b, budget)
                              : aqecc::uuv_aqecc(a, b, budget);
      out.result = aqecc::derivation_to_json(der);
      out.exit_code = status_exit(der.claim.status);
      emit(g, command, inputs, out, started);
      return out.exit_code;
    }
    if (ap->parsed()) {
      inputs = {{"pair", arg_pair}, {"i", arg_i}};
      auto der = aqecc::puncture_aqecc(read_pair(arg_pair), arg_i, budget);
      out.result = aqecc::derivation_to_json(der);
      out.exit_code = status_exit(der.claim.status);
      emit(g, command, inputs, out, started);
      return out.exit_code;
    }
    if (ax->parsed()) {
      inputs = {{"pair", arg_pair}};
      auto der = aqecc::extend_aqecc(read_pair(arg_pair), budget);
      out.result = aqecc::derivation_to_json(der);
      out.exit_code = status_exit(der.claim.status);
      emit(g, command, inputs, out, started);
      return out.exit_code;
    }

    if (tb->parsed()) {
      caps.budget = budget;
      if (arg_only_q != 0) caps.only_q = arg_only_q;
      auto rows = aqecc::make_table(arg_family, caps);
      if (arg_format == "csv")
        std::cout << aqecc::table_to_csv(rows);
      else
        std::cout << aqecc::table_to_json(rows).dump(1) << "\n";
      // manifest goes to stderr so stdout stays byte-stable across runs
      Json inputs_t{{"family", arg_family}, {"format", arg_format},
                    {"max_m", caps.max_m},  {"max_p", caps.max_p},
                    {"max_n", caps.max_n},  {"max_q", caps.max_q}};
      auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - started)
                         .count();
      Json manifest{{"command", command}, {"inputs", inputs_t},
                    {"seed", g.seed},     {"budget", g.budget},
                    {"threads", g.threads},
                    {"outputs", Json{{"rows", rows.size()}}},
                    {"wall_clock_ms", elapsed}};
      std::cerr << manifest.dump(1) << "\n";
      return 0;
    }

    if (vf->parsed()) {
      aqecc::VerifyOptions opts;
      opts.seed = g.seed;
      opts.budget = budget;
      opts.max_q = arg_max_q;
      auto results = aqecc::run_verify(arg_suite, opts);
      Json suites = Json::array();
      bool all_ok = true;
      for (const auto& r : results) {
        all_ok = all_ok && r.ok();
        suites.push_back(Json{{"suite", r.suite},
                              {"checks", r.checks},
                              {"failures", r.failures},
                              {"messages", r.messages},
                              {"warnings", r.warnings}});
      }
      out.result = Json{{"suites", std::move(suites)}, {"passed", all_ok}};
      out.exit_code = all_ok ? 0 : 1;
      inputs = {{"suite", arg_suite}, {"max_q", arg_max_q}};
      emit(g, command, inputs, out, started);
      return out.exit_code;
    }
  } catch (const std::invalid_argument& e) {
    Json err{{"error", e.what()}};
    std::cout << err.dump(1) << "\n";
    return 3;
  } catch (const std::exception& e) {
    Json err{{"error", e.what()}};
    std::cout << err.dump(1) << "\n";
    return 1;
  }
  return 1;
}
