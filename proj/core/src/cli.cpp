#include "xsigma/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <sstream>

#include "xsigma/compact.hpp"
#include "xsigma/report.hpp"
#include "xsigma/verify.hpp"

namespace xsigma::cli {

using compact::SigmaSet;
using rootsys::RootSystem;
using rootsys::RootSystemPtr;
using rootsys::WeightVec;

namespace {

std::vector<int> parse_weight_coords(const std::string& text, int rank) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
          return std::isdigit(c);
        }))
      throw ParseError("weight coordinate '" + tok + "' is not a nonnegative integer");
    out.push_back(std::stoi(tok));
  }
  if (static_cast<int>(out.size()) != rank)
    throw ParseError("weight has " + std::to_string(out.size()) + " coordinates, expected " +
                     std::to_string(rank));
  return out;
}

std::vector<WeightVec> parse_sigma(const RootSystemPtr& sys, const std::string& text) {
  std::vector<WeightVec> out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ';')) {
    if (tok.empty()) continue;
    out.push_back(sys->weight(parse_weight_coords(tok, sys->rank())));
  }
  if (out.empty()) throw ParseError("--sigma is empty");
  return out;
}

struct SweepRow {
  std::string support;
  bool star;
  bool normal;
  bool q_factorial;
  bool smooth;
  int n_rays;
};

SweepRow sweep_row(const RootSystemPtr& sys, std::uint64_t mask) {
  std::vector<int> coords(sys->rank(), 0);
  for (int i = 0; i < sys->rank(); ++i)
    if ((mask >> i) & 1) coords[i] = 1;
  WeightVec lambda = sys->weight(std::move(coords));

  SweepRow row;
  row.support = rootsys::subset_str(rootsys::support(lambda));
  row.star = compact::satisfies_star(lambda);
  row.normal = row.star;  // Sigma = {lambda}: normal iff no little brothers
  row.q_factorial = true;
  row.smooth = true;
  row.n_rays = 0;
  for (const auto& comp : sys->components()) {
    std::vector<int> sub_coords(lambda.coords.begin() + comp.offset,
                                lambda.coords.begin() + comp.offset + comp.rank);
    auto sub = RootSystem::assemble({{comp.letter, comp.rank}});
    WeightVec restricted = sub->weight(std::move(sub_coords));
    if (restricted.is_zero()) continue;
    row.q_factorial &= compact::is_q_factorial(restricted).value;
    row.n_rays += static_cast<int>(compact::extremal_rays(restricted).size());
  }
  row.smooth = compact::is_smooth(SigmaSet::create({lambda})).value;
  return row;
}

int cmd_decide(const std::string& type, const std::string& weight, const std::string& sigma_text,
               bool certify, std::ostream& out, std::ostream& err) {
  auto sys = RootSystem::build(type);
  WeightVec lambda = sys->weight(parse_weight_coords(weight, sys->rank()));
  std::vector<WeightVec> sigma_weights;
  if (sigma_text.empty())
    sigma_weights = {lambda};
  else
    sigma_weights = parse_sigma(sys, sigma_text);
  auto sigma = SigmaSet::create(std::move(sigma_weights));
  if (!(sigma.max == lambda))
    throw ParseError("--weight " + lambda.str() + " is not the maximal element of --sigma (" +
                     sigma.max.str() + " is)");
  auto report = report::build_decision_report(sys, lambda, sigma, certify);
  for (const auto& w : report.warnings) err << "warning: " << w << "\n";
  out << report::to_json_string(report);
  return 0;
}

int cmd_sweep(const std::string& type, const std::string& format, std::ostream& out) {
  out << sweep_table(type, format);
  return 0;
}

int cmd_verify(const std::string& suite, int max_rank, long long dim_cap, std::ostream& out) {
  verify::Options opts;
  opts.max_rank = max_rank;
  if (dim_cap > 0) opts.guards.dim_cap = dim_cap;

  std::vector<verify::SuiteResult> results;
  if (suite == "all") {
    results = verify::run_all(opts);
  } else if (suite == "rays") {
    results.push_back(verify::run_rays(opts));
  } else if (suite == "normality") {
    results.push_back(verify::run_normality(opts));
  } else if (suite == "lemmas") {
    results.push_back(verify::run_lemmas(opts));
  } else if (suite == "covers") {
    results.push_back(verify::run_covers(opts));
  } else {
    throw ParseError("unknown suite '" + suite + "'");
  }
  bool all_pass = true;
  for (const auto& res : results) {
    for (const auto& item : res.items) {
      all_pass &= item.pass;
      out << (item.pass ? "PASS" : "FAIL") << " [criterion " << item.criterion << "] "
          << item.name;
      if (!item.note.empty()) out << " -- " << item.note;
      out << "\n";
    }
  }
  out << (all_pass ? "all checks passed" : "FAILURES present") << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

std::string sweep_table(const std::string& type, const std::string& format) {
  auto sys = RootSystem::build(type);
  if (sys->rank() > 20) throw ParseError("sweep over 2^rank supports needs rank <= 20");
  std::ostringstream out;
  if (format == "csv") {
    out << "type,support,star,normal,q_factorial,smooth,n_rays\n";
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << sys->rank()); ++mask) {
      SweepRow row = sweep_row(sys, mask);
      out << sys->name() << ",\"" << row.support << "\"," << (row.star ? "true" : "false") << ","
          << (row.normal ? "true" : "false") << "," << (row.q_factorial ? "true" : "false") << ","
          << (row.smooth ? "true" : "false") << "," << row.n_rays << "\n";
    }
  } else if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << sys->rank()); ++mask) {
      SweepRow row = sweep_row(sys, mask);
      rows.push_back({{"type", sys->name()},
                      {"support", row.support},
                      {"star", row.star},
                      {"normal", row.normal},
                      {"q_factorial", row.q_factorial},
                      {"smooth", row.smooth},
                      {"n_rays", row.n_rays}});
    }
    out << rows.dump(2) << "\n";
  } else {
    throw ParseError("unknown output format '" + format + "' (use csv or json)");
  }
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"decision procedures for simple linear projective compactifications of adjoint "
               "groups"};
  app.require_subcommand(1);

  std::string type, weight, sigma_text, format = "csv", suite;
  bool certify = false;
  int max_rank = 6;
  long long dim_cap = 0;

  auto* decide = app.add_subcommand("decide", "decide normality, Q-factoriality and smoothness");
  decide->add_option("--type", type, "root system type, e.g. B3 or A2xB3")->required();
  decide->add_option("--weight", weight, "dominant weight, comma-separated coordinates")
      ->required();
  decide->add_option("--sigma", sigma_text, "semicolon-separated weights of a simple set");
  decide->add_flag("--certify", certify, "emit normality certificate chains when normal");

  auto* sweep = app.add_subcommand("sweep", "classify every nonempty support of a type");
  sweep->add_option("--type", type, "root system type")->required();
  sweep->add_option("--out", format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* verify_cmd = app.add_subcommand("verify", "run the oracle verification suites");
  verify_cmd->add_option("--suite", suite, "rays|normality|lemmas|covers|all")
      ->required()
      ->check(CLI::IsMember({"rays", "normality", "lemmas", "covers", "all"}));
  verify_cmd->add_option("--max-rank", max_rank, "largest rank in the ray sweeps");
  verify_cmd->add_option("--dim-cap", dim_cap, "override the module dimension guard");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(decide)) return cmd_decide(type, weight, sigma_text, certify, out, err);
    if (app.got_subcommand(sweep)) return cmd_sweep(type, format, out);
    if (app.got_subcommand(verify_cmd)) return cmd_verify(suite, max_rank, dim_cap, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace xsigma::cli
