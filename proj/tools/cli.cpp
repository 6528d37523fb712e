#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "azposet/az.hpp"
#include "azposet/families.hpp"
#include "azposet/io.hpp"
#include "azposet/properties.hpp"
#include "azposet/random.hpp"
#include "azposet/sperner.hpp"
#include "azposet/twopart.hpp"
#include "azposet/verify/acceptance.hpp"

namespace azposet::cli {

namespace {

using nlohmann::json;

// Raised for malformed arguments that CLI11 cannot see (spec strings, families).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(what + " is not valid JSON: " + e.what());
  }
}

RankedPoset load_poset(const std::string& spec) {
  if (!spec.empty() && spec.front() == '@') {
    return poset_from_json(parse_json_text(read_file(spec.substr(1)), spec));
  }
  return generate(spec);
}

// Splits at commas outside any bracket pair.
std::vector<std::string> split_top_level(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(' || ch == '{' || ch == '[' || ch == '<') ++depth;
    if (ch == ')' || ch == '}' || ch == ']' || ch == '>') --depth;
    if (ch == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty() || !parts.empty()) parts.push_back(cur);
  return parts;
}

// A label when one matches, else an id; "#n" always means id n.
ElementId resolve_element(const RankedPoset& P, const std::string& token) {
  if (token.empty()) throw UsageError("empty element name");
  if (token.front() != '#') {
    if (auto id = P.find_label(token)) return *id;
  }
  const std::string digits = token.front() == '#' ? token.substr(1) : token;
  if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
    const unsigned long long id = std::stoull(digits);
    if (id < P.size()) return static_cast<ElementId>(id);
  }
  throw UsageError("'" + token + "' is neither a label nor an element id of '" + P.name() + "'");
}

struct FamilyInput {
  Family family;
  json source;
};

FamilyInput load_family(const RankedPoset& P, const std::string& text, std::optional<std::uint64_t> seed) {
  FamilyInput in;
  if (text.rfind("random:", 0) == 0) {
    const auto fields = split_top_level(text.substr(7), ':');
    if (fields.empty() || fields.size() > 2) throw UsageError("random families are written random:n or random:n:seed");
    try {
      const std::size_t n = std::stoull(fields[0]);
      const std::uint64_t s = fields.size() == 2 ? std::stoull(fields[1]) : seed.value_or(0);
      in.family = random_family(P, n, s);
      in.source = {{"random", n}, {"seed", s}, {"rng", std::string(kRandomAlgorithm)}};
    } catch (const std::logic_error&) {
      throw UsageError("bad random family '" + text + "'");
    }
    return in;
  }
  if (!text.empty() && text.front() == '@') {
    const json doc = parse_json_text(read_file(text.substr(1)), text);
    if (doc.is_array() && std::all_of(doc.begin(), doc.end(), [](const json& v) { return v.is_string(); })) {
      std::vector<ElementId> ids;
      for (const auto& v : doc) ids.push_back(resolve_element(P, v.get<std::string>()));
      in.family = Family(std::move(ids));
    } else {
      in.family = family_from_json(doc);
      P.require_members(in.family);
    }
    in.source = text;
    return in;
  }
  std::vector<ElementId> ids;
  for (const auto& token : split_top_level(text, ',')) ids.push_back(resolve_element(P, token));
  in.family = Family(std::move(ids));
  in.source = text;
  return in;
}

ProductFamily load_product_family(const std::string& text) {
  const std::string body = !text.empty() && text.front() == '@' ? read_file(text.substr(1)) : text;
  return product_family_from_json(parse_json_text(body, "product family"));
}

std::vector<ElementId> parse_chain(const RankedPoset& P, const std::string& text) {
  std::vector<ElementId> chain;
  for (const auto& token : split_top_level(text, ',')) chain.push_back(resolve_element(P, token));
  return chain;
}

std::string digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

class Timer {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json labelled(const RankedPoset& P, const Family& F) {
  json out = json::array();
  for (ElementId a : F) out.push_back(P.label(a));
  return out;
}

// Shared state for one invocation: output sink and the overall verdict.
struct Session {
  std::ostream& out;
  bool all_pass = true;

  void emit(json report, bool pass) {
    all_pass = all_pass && pass;
    out << report.dump() << '\n';
  }
};

// ---------------------------------------------------------------- gen / export

void cmd_gen(Session& s, const std::string& spec, bool full) {
  const RankedPoset P = load_poset(spec);
  if (full) {
    s.out << poset_to_json(P).dump() << '\n';
    return;
  }
  s.emit({{"operation", "gen"},
          {"poset", spec},
          {"name", P.name()},
          {"size", P.size()},
          {"rank", P.max_rank()},
          {"whitney", P.whitney_numbers()},
          {"covers", P.covers().size()},
          {"graded", P.is_graded()},
          {"u_poset", P.is_u_poset()}},
         true);
}

void write_target(Session& s, const std::string& target, const std::string& text, json& files) {
  if (target == "-") {
    s.out << text;
    if (text.empty() || text.back() != '\n') s.out << '\n';
    return;
  }
  std::ofstream f(target);
  if (!f) throw UsageError("cannot write '" + target + "'");
  f << text;
  files.push_back(target);
}

void cmd_export(Session& s, const std::string& spec, const std::string& dot, const std::string& json_path) {
  if (dot.empty() && json_path.empty()) throw UsageError("export needs --dot and/or --json");
  const RankedPoset P = load_poset(spec);
  json files = json::array();
  if (!dot.empty()) write_target(s, dot, poset_to_dot(P), files);
  if (!json_path.empty()) write_target(s, json_path, poset_to_json(P).dump(2), files);
  if (!files.empty()) s.emit({{"operation", "export"}, {"poset", spec}, {"files", files}}, true);
}

// ---------------------------------------------------------------- check

void cmd_check(Session& s, const std::string& spec, std::vector<std::string> properties, const std::string& mode) {
  const RankedPoset P = load_poset(spec);
  if (properties.empty() || std::find(properties.begin(), properties.end(), "all") != properties.end()) {
    properties = {"regular", "normal", "strictly-normal", "level-connected", "strongly-regular", "covering"};
  }
  for (const auto& prop : properties) {
    Timer timer;
    json cert;
    try {
      if (prop == "regular") {
        const auto r = check_regular(P);
        cert = certificate(P, r);
        if (r.holds) cert["level_size_identity"] = check_level_size_identity(P, *r.profile);
      } else if (prop == "normal") {
        cert = certificate(P, check_normal(P, mode == "enumerate" ? NormalityMode::Enumerate : NormalityMode::Flow));
        cert["mode"] = mode;
      } else if (prop == "strictly-normal") {
        cert = certificate(P, check_strictly_normal(P));
      } else if (prop == "level-connected") {
        cert = certificate(P, check_level_connected(P));
      } else if (prop == "strongly-regular") {
        cert = certificate(P, check_strongly_regular(P));
      } else if (prop == "covering") {
        const auto cov = build_chain_covering(P);
        const auto v = verify_chain_covering(P, cov);
        cert = {{"property", "chain_covering"},
                {"holds", v.holds},
                {"marginals_hold", v.marginals_hold},
                {"chains_hold", v.chains_hold},
                {"total_mass", to_string(v.total_mass)},
                {"witness", v.violated_element ? json{*v.violated_element} : json(nullptr)}};
      } else {
        throw UsageError("unknown property '" + prop + "'");
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InvalidInput) throw;
      cert = {{"property", prop}, {"holds", false}, {"error", std::string(to_string(e.code()))}, {"message", e.what()}};
    }
    cert["operation"] = "check";
    cert["poset"] = spec;
    cert["verdict"] = cert["holds"].get<bool>() ? "pass" : "fail";
    cert["seconds"] = timer.seconds();
    const bool pass = cert["holds"].get<bool>();
    s.emit(std::move(cert), pass);
  }
}

// ---------------------------------------------------------------- az verify

std::vector<std::pair<ElementId, ElementId>> parse_pairs(const RankedPoset& P, const std::string& text) {
  std::vector<std::pair<ElementId, ElementId>> pairs;
  for (const auto& item : split_top_level(text, ';')) {
    const auto ends = split_top_level(item, ':');
    if (ends.size() != 2) throw UsageError("pairs are written a:b;c:d, got '" + item + "'");
    pairs.emplace_back(resolve_element(P, ends[0]), resolve_element(P, ends[1]));
  }
  return pairs;
}

void cmd_az(Session& s, const std::string& spec, const std::string& family, const std::string& identity,
            std::optional<unsigned> k, const std::string& pairs, std::optional<std::uint64_t> seed) {
  const RankedPoset P = load_poset(spec);
  Timer timer;
  json report{{"operation", "az verify"}, {"identity", identity}, {"poset", spec}};
  Rational result;
  Rational expected = 1;

  if (identity == "thm5") {
    if (pairs.empty()) throw UsageError("--identity thm5 needs --pairs a:b;c:d");
    SkewPairSystem sys{parse_pairs(P, pairs)};
    const auto r = second_az_identity(P, sys);
    json betas = json::array();
    for (const auto& b : r.betas) betas.push_back(to_string(b));
    report["inputs"] = pairs;
    report["betas"] = betas;
    report["beta_sum"] = to_string(r.beta_sum);
    report["remainder"] = to_string(r.remainder);
    result = r.total;
  } else {
    if (family.empty()) throw UsageError("--identity " + identity + " needs --family");
    const FamilyInput in = load_family(P, family, seed);
    const Family& A = in.family;
    report["inputs"] = in.source;
    report["family"] = A.ids();
    report["family_labels"] = labelled(P, A);
    if (identity == "thm1") {
      const auto b = az_identity_sum(P, A);
      report["breakdown"] = to_json(P, b);
      report["regular"] = b.regular;
      result = b.total;
    } else if (identity == "keylemma") {
      const auto r = key_lemma_sum(P, A);
      report["bounded_total"] = to_string(r.bounded_total);
      result = r.total;
      if (r.bounded_total != r.total) expected = r.bounded_total;
    } else if (identity == "cor2") {
      const auto r = antichain_az(P, A);
      report["lym_part"] = to_string(r.lym_part);
      report["remainder"] = to_string(r.remainder_part);
      result = r.total();
    } else if (identity == "cor3") {
      const unsigned kk = k.value_or(static_cast<unsigned>(std::max<std::size_t>(1, longest_chain_length(P, A))));
      const auto r = k_sperner_az(P, A, kk);
      json parts = json::array(), rems = json::array();
      for (const auto& part : r.parts) parts.push_back(part.ids());
      for (const auto& rem : r.remainders) rems.push_back(to_string(rem));
      report["k"] = kk;
      report["parts"] = parts;
      report["lym_part"] = to_string(r.lym_part);
      report["remainders"] = rems;
      result = r.total;
      expected = kk;
    } else {
      throw UsageError("unknown identity '" + identity + "'");
    }
  }
  report["digest"] = digest(report["inputs"].dump());
  report["result"] = to_string(result);
  report["expected"] = to_string(expected);
  const bool pass = result == expected;
  report["verdict"] = pass ? "pass" : "deviates";
  report["seconds"] = timer.seconds();
  s.emit(std::move(report), pass);
}

// ---------------------------------------------------------------- sperner

StrictSpernerMode parse_sperner_mode(const std::string& mode) {
  if (mode == "auto") return StrictSpernerMode::Auto;
  if (mode == "exhaustive") return StrictSpernerMode::Exhaustive;
  if (mode == "oracle") return StrictSpernerMode::Oracle;
  throw UsageError("unknown mode '" + mode + "'");
}

void cmd_sperner(Session& s, const std::string& spec, unsigned k, const std::string& mode, const std::string& family,
                 bool all, bool max_ac, std::optional<std::uint64_t> seed) {
  const RankedPoset P = load_poset(spec);
  Timer timer;
  json report{{"operation", "sperner"}, {"poset", spec}, {"k", k}};
  bool pass = true;
  if (max_ac) {
    const auto r = max_antichain(P);
    report["operation"] = "sperner max-antichain";
    report["size"] = r.antichain.size();
    report["antichain"] = r.antichain.ids();
    report["antichain_labels"] = labelled(P, r.antichain);
    report["chain_cover_size"] = r.chain_cover.size();
    pass = r.antichain.size() == r.chain_cover.size();
  } else if (!family.empty()) {
    const FamilyInput in = load_family(P, family, seed);
    const Family& F = in.family;
    const auto ks = is_k_sperner(P, F, k);
    report["operation"] = "sperner family";
    report["inputs"] = in.source;
    report["family"] = F.ids();
    report["k_sperner"] = ks.holds;
    report["witness"] = ks.holds ? json(nullptr) : json(ks.chain);
    report["lym_sum"] = to_string(lym_sum(P, F));
    report["antichain_parts"] = dual_dilworth_decompose(P, F).parts.size();
    if (ks.holds) {
      const auto lym = check_strict_lym(P, F, k);
      report["lym_verdict"] = std::string(to_string(lym.verdict));
      pass = lym.verdict != LymVerdict::Counterexample && lym.verdict != LymVerdict::BoundExceeded;
    } else {
      pass = false;
    }
  } else {
    const auto r = check_strict_k_sperner(P, k, parse_sperner_mode(mode));
    report.update(certificate(P, r));
    if (r.witness) report["witness_labels"] = labelled(P, *r.witness);
    if (all) {
      json fams = json::array();
      for (const auto& F : maximum_k_sperner_families(P, k)) fams.push_back(F.ids());
      report["families"] = fams;
    }
    pass = r.holds;
  }
  report["verdict"] = pass ? "pass" : "fail";
  report["seconds"] = timer.seconds();
  s.emit(std::move(report), pass);
}

// ---------------------------------------------------------------- twopart

json families_json(const std::vector<ProductFamily>& families) {
  json out = json::array();
  for (const auto& F : families) out.push_back(to_json(F));
  return out;
}

void cmd_twopart(Session& s, const std::string& action, const std::string& pspec, const std::string& qspec,
                 bool all, bool skip_strict_check, const std::string& family, const std::string& chain1,
                 const std::string& chain2) {
  const RankedPoset P = load_poset(pspec);
  const RankedPoset Q = load_poset(qspec);
  Timer timer;
  json report{{"operation", "twopart " + action}, {"p", pspec}, {"q", qspec}};
  bool pass = true;
  if (action == "max") {
    const auto r = max_two_part_sperner_exact(P, Q, all);
    report["size"] = r.size;
    report["well_paired_size"] = to_string(well_paired_size(P, Q));
    report["families"] = families_json(r.families);
  } else if (action == "verify-strict") {
    const auto r = verify_strict_two_part(P, Q, !skip_strict_check);
    report["holds"] = r.holds;
    report["maximum_size"] = r.maximum_size;
    report["well_paired_size"] = to_string(r.well_paired_size);
    report["maxima"] = r.maxima;
    report["non_homogeneous_maxima"] = r.non_homogeneous_maxima;
    report["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
    pass = r.holds;
  } else if (action == "transversal") {
    const auto r = best_full_transversal(P, Q);
    report["transversal"] = to_json(r.transversal);
    report["size"] = to_string(r.size);
    report["well_paired_size"] = to_string(well_paired_size(P, Q));
    report["family"] = to_json(homogeneous_family(P, Q, r.transversal));
  } else if (action == "az") {
    if (family.empty()) throw UsageError("twopart az needs --family");
    const ProductFamily A = load_product_family(family);
    require_members(P, Q, A);
    const auto sum = two_part_az_sum(P, Q, A);
    const Rational expected(Q.max_rank() + 1);
    report["inputs"] = to_json(A);
    report["digest"] = digest(report["inputs"].dump());
    report["result"] = to_string(sum.total);
    report["expected"] = to_string(expected);
    const auto sperner = is_two_part_sperner(P, Q, A);
    report["two_part_sperner"] = sperner.holds;
    if (sperner.holds) {
      const auto id = two_part_sperner_identity(P, Q, A);
      report["lym_part"] = to_string(id.lym_part);
      report["remainder"] = to_string(id.remainder);
      report["two_part_lym"] = to_string(two_part_lym(P, Q, A));
      report["swapped"] = id.swapped;
    }
    pass = sum.total == expected;
    report["verdict"] = pass ? "pass" : "deviates";
  } else if (action == "chain-bound") {
    if (family.empty() || chain1.empty() || chain2.empty()) {
      throw UsageError("twopart chain-bound needs --family, --c1 and --c2");
    }
    const ProductFamily F = load_product_family(family);
    const auto b = chain_pair_bound(P, Q, F, parse_chain(P, chain1), parse_chain(Q, chain2));
    report["count"] = b.count;
    report["bound"] = b.bound;
    pass = b.count <= b.bound;
  } else {
    throw UsageError("unknown twopart action '" + action + "'");
  }
  if (!report.contains("verdict")) report["verdict"] = pass ? "pass" : "fail";
  report["seconds"] = timer.seconds();
  s.emit(std::move(report), pass);
}

// ---------------------------------------------------------------- suite

void cmd_suite(Session& s, const std::string& level, const std::vector<int>& ids) {
  if (level != "desk") throw UsageError("unknown suite level '" + level + "', expected desk");
  Timer timer;
  std::size_t passed = 0, failed = 0;
  verify::run_acceptance(ids, [&](const verify::CriterionResult& r) {
    (r.pass ? passed : failed) += 1;
    s.emit({{"operation", "suite"},
            {"criterion", r.id},
            {"name", r.name},
            {"verdict", r.pass ? "pass" : "fail"},
            {"detail", r.detail},
            {"seconds", r.seconds}},
           r.pass);
  });
  s.emit({{"operation", "suite"}, {"level", level}, {"passed", passed}, {"failed", failed}, {"seconds", timer.seconds()}},
         failed == 0);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ranked poset toolkit: generators, structural checks and exact identity verification", "azposet"};
  app.require_subcommand(1);

  std::string poset, family, identity = "thm1", mode = "flow", pairs, dot, json_out, level = "desk";
  std::string pspec, qspec, chain1, chain2, sperner_mode = "auto";
  std::vector<std::string> properties;
  std::vector<int> criteria;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> k;
  unsigned sperner_k = 1;
  bool full_json = false, all = false, max_ac = false, skip_strict = false;

  auto* gen = app.add_subcommand("gen", "Generate a poset and print its summary or full JSON");
  gen->add_option("-p,--poset", poset, "Family spec such as boolean:4 or @file.json")->required();
  gen->add_flag("--json", full_json, "Print the full poset as JSON");

  auto* check = app.add_subcommand("check", "Check structural properties");
  check->add_option("-p,--poset", poset, "Family spec or @file.json")->required();
  check->add_option("--property", properties,
                    "regular, normal, strictly-normal, level-connected, strongly-regular, covering or all");
  check->add_option("--mode", mode, "Normality mode: enumerate or flow")
      ->check(CLI::IsMember({"enumerate", "flow"}));

  auto* az = app.add_subcommand("az", "Verify identity sums");
  az->require_subcommand(1);
  auto* az_verify = az->add_subcommand("verify", "Evaluate one identity exactly");
  az_verify->add_option("-p,--poset", poset, "Family spec or @file.json")->required();
  az_verify->add_option("--family", family, "Labels or ids, @file, or random:n[:seed]");
  az_verify->add_option("--identity", identity, "thm1, keylemma, cor2, cor3 or thm5")
      ->check(CLI::IsMember({"thm1", "keylemma", "cor2", "cor3", "thm5"}));
  az_verify->add_option("--k", k, "Number of antichains for cor3");
  az_verify->add_option("--pairs", pairs, "Skew pairs a:b;c:d for thm5");
  az_verify->add_option("--seed", seed, "Seed for random:n families");

  auto* sperner = app.add_subcommand("sperner", "Strict Sperner checks, family checks and maximum antichains");
  sperner->add_option("-p,--poset", poset, "Family spec or @file.json")->required();
  sperner->add_option("--k", sperner_k, "Chain length bound k")->check(CLI::PositiveNumber);
  sperner->add_option("--mode", sperner_mode, "auto, exhaustive or oracle")
      ->check(CLI::IsMember({"auto", "exhaustive", "oracle"}));
  sperner->add_option("--family", family, "Check this family instead of the whole poset");
  sperner->add_flag("--all", all, "List every maximum k-Sperner family");
  sperner->add_flag("--max-antichain", max_ac, "Report a maximum antichain");
  sperner->add_option("--seed", seed, "Seed for random:n families");

  auto* twopart = app.add_subcommand("twopart", "Two-part Sperner systems in a product P x Q");
  twopart->require_subcommand(1);
  std::string action;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"max", "Exact maximum 2-part Sperner families"},
           {"verify-strict", "Check that every maximum family is well-paired"},
           {"transversal", "Best full transversal and its homogeneous family"},
           {"az", "Two-part identity sum for a product family"},
           {"chain-bound", "Intersection of a family with a pair of maximal chains"}}) {
    auto* sub = twopart->add_subcommand(name, help);
    sub->add_option("--p", pspec, "First factor")->required();
    sub->add_option("--q", qspec, "Second factor")->required();
    if (name == "max") sub->add_flag("--all", all, "List every maximum family");
    if (name == "verify-strict") sub->add_flag("--skip-strict-check", skip_strict, "Allow factors that are not strictly normal");
    if (name == "az" || name == "chain-bound") sub->add_option("--family", family, "JSON [[p, q], ...] or @file");
    if (name == "chain-bound") {
      sub->add_option("--c1", chain1, "Maximal chain of P, bottom-up");
      sub->add_option("--c2", chain2, "Maximal chain of Q, bottom-up");
    }
    sub->callback([&action, name = name] { action = name; });
  }

  auto* suite = app.add_subcommand("suite", "Run the acceptance suite");
  suite->add_option("--level", level, "Suite level (desk)");
  suite->add_option("--criterion", criteria, "Run only these criteria");

  auto* exp = app.add_subcommand("export", "Write the Hasse diagram as DOT and/or the poset as JSON");
  exp->add_option("-p,--poset", poset, "Family spec or @file.json")->required();
  exp->add_option("--dot", dot, "DOT output path, - for standard output");
  exp->add_option("--json", json_out, "JSON output path, - for standard output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    err << "run with --help for usage\n";
    return 2;
  }

  Session session{out};
  try {
    if (gen->parsed()) {
      cmd_gen(session, poset, full_json);
    } else if (check->parsed()) {
      cmd_check(session, poset, properties, mode);
    } else if (az_verify->parsed()) {
      cmd_az(session, poset, family, identity, k, pairs, seed);
    } else if (sperner->parsed()) {
      cmd_sperner(session, poset, sperner_k, sperner_mode, family, all, max_ac, seed);
    } else if (twopart->parsed()) {
      cmd_twopart(session, action, pspec, qspec, all, skip_strict, family, chain1, chain2);
    } else if (suite->parsed()) {
      cmd_suite(session, level, criteria);
    } else if (exp->parsed()) {
      cmd_export(session, poset, dot, json_out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidInput) {
      err << "error: " << e.what() << '\n';
      return 2;
    }
    out << json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}, {"verdict", "fail"}}.dump() << '\n';
    return 1;
  }
  return session.all_pass ? 0 : 1;
}

}  // namespace azposet::cli
