#include <chrono>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "moufang/constructions.hpp"
#include "moufang/errors.hpp"
#include "moufang/loop.hpp"
#include "moufang/loop_io.hpp"
#include "moufang/mappings.hpp"
#include "moufang/perm_group.hpp"
#include "moufang/s3module.hpp"
#include "moufang/structure.hpp"
#include "moufang/triality.hpp"

namespace {

using Json = nlohmann::ordered_json;
using moufang::ErrorCode;
using moufang::FiniteLoop;
using moufang::Idx;

constexpr const char* kVersion = "1.0.0";

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(value));
  return buf;
}

Json loop_fingerprint(const FiniteLoop& loop) {
  return Json{{"order", loop.order()},
              {"table_hash", hex64(loop.table_fingerprint())}};
}

// Reports are deterministic for fixed input and flags; timing goes to
// standard error only.
void emit_report(const std::string& command, Json input, Json results) {
  Json report;
  report["command"] = command;
  report["input"] = std::move(input);
  report["results"] = std::move(results);
  report["version"] = kVersion;
  std::cout << report.dump(2) << "\n";
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ClosureBudgetExceeded:
    case ErrorCode::TableTooLarge:
    case ErrorCode::CarrierTooLarge:
    case ErrorCode::InternalError:
      return 3;
    case ErrorCode::NotLatinSquare:
    case ErrorCode::NoIdentity:
    case ErrorCode::NotNormal:
    case ErrorCode::NotASubloop:
    case ErrorCode::NotAGroup:
    case ErrorCode::NotSylowPrime:
    case ErrorCode::TrialityViolated:
    case ErrorCode::NotTriality:
    case ErrorCode::RelationsViolated:
    case ErrorCode::RadicalNotTrivial:
      return 1;
    default:
      return 2;
  }
}

std::int64_t parse_suffix_int(const std::string& text, std::size_t offset) {
  std::int64_t value = 0;
  const char* first = text.data() + offset;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    moufang::fail(ErrorCode::UnknownName,
                  "cannot parse a number from \"" + text + "\"");
  return value;
}

bool has_prefix(const std::string& text, const std::string& prefix) {
  return text.size() > prefix.size() &&
         text.compare(0, prefix.size(), prefix) == 0;
}

// construct names: paige-q<q>, paige-hat-q<q>, chein-<group>, group-<group>.
FiniteLoop build_named(const std::string& name) {
  if (has_prefix(name, "paige-hat-q"))
    return moufang::paige_hat(parse_suffix_int(name, 11));
  if (has_prefix(name, "paige-q"))
    return moufang::paige_loop(parse_suffix_int(name, 7));
  if (has_prefix(name, "chein-"))
    return moufang::chein_double(moufang::stock_group(name.substr(6)));
  if (has_prefix(name, "group-"))
    return moufang::stock_group(name.substr(6));
  moufang::fail(ErrorCode::UnknownName,
                "unknown construction \"" + name +
                    "\"; expected paige-q<q>, paige-hat-q<q>, "
                    "chein-<group> or group-<group>");
}

// archetype names: z3, inner-s3, zpzp-<p>, wreath3-<group>, trivial-<group>.
moufang::TrialityGroup build_archetype(const std::string& name) {
  if (name == "z3") return moufang::build_z3();
  if (name == "inner-s3") return moufang::build_inner_s3();
  if (has_prefix(name, "zpzp-"))
    return moufang::build_zpzp(
        static_cast<int>(parse_suffix_int(name, 5)));
  if (has_prefix(name, "wreath3-"))
    return moufang::build_wreath3(moufang::stock_group(name.substr(8)));
  if (has_prefix(name, "trivial-"))
    return moufang::build_trivial_action(moufang::stock_group(name.substr(8)));
  moufang::fail(ErrorCode::UnknownName,
                "unknown archetype \"" + name +
                    "\"; expected z3, inner-s3, zpzp-<p>, "
                    "wreath3-<group> or trivial-<group>");
}

int run_construct(const std::string& name, const std::string& out_path) {
  FiniteLoop loop = build_named(name);
  if (out_path.empty()) {
    std::cout << moufang::loop_to_json_text(loop);
  } else {
    moufang::write_loop_file(loop, out_path);
    emit_report("construct", Json{{"construction", name}},
                Json{{"name", loop.name()},
                     {"order", loop.order()},
                     {"table_hash", hex64(loop.table_fingerprint())},
                     {"written", out_path}});
  }
  std::cerr << "constructed " << loop.name() << " of order " << loop.order()
            << "\n";
  return 0;
}

int run_check(const std::string& path) {
  moufang::LoopFileData data = moufang::read_loop_file_data(path);
  Json results;
  results["name"] = data.name;
  results["order"] = data.table.size();
  bool latin = true;
  bool identity = true;
  std::optional<FiniteLoop> loop;
  try {
    loop = moufang::loop_from_data(data);
  } catch (const moufang::MoufangError& e) {
    if (e.code() == ErrorCode::NotLatinSquare) {
      latin = false;
      identity = false;
    } else if (e.code() == ErrorCode::NoIdentity) {
      identity = false;
    } else {
      throw;
    }
  }
  results["latin"] = latin;
  results["identity"] = identity;
  bool moufang_ok = false;
  if (loop) {
    auto moufang_report = moufang::check_moufang(*loop);
    moufang_ok = moufang_report.ok;
    results["moufang"] = moufang_report.ok;
    if (!moufang_report.ok)
      results["moufang_witness"] =
          Json::array({moufang_report.witness[0], moufang_report.witness[1],
                       moufang_report.witness[2]});
    results["associative"] = moufang::is_associative(*loop);
  } else {
    results["moufang"] = false;
    results["associative"] = false;
  }
  Json input =
      loop ? loop_fingerprint(*loop)
           : Json{{"order", data.table.size()}, {"table_hash", nullptr}};
  emit_report("check", std::move(input), std::move(results));
  std::cerr << (moufang_ok ? "loop is Moufang" : "negative verdict") << "\n";
  return moufang_ok ? 0 : 1;
}

Json factor_entry(const moufang::FactorKind& kind, int multiplicity) {
  return Json{{"factor", moufang::factor_name(kind)},
              {"order", kind.order},
              {"multiplicity", multiplicity}};
}

int run_series(const std::string& path) {
  FiniteLoop loop = moufang::read_loop_file(path);
  moufang::CompositionData data = moufang::chief_decomposition(loop);
  Json chain = Json::array();
  for (const auto& sub : data.chain) chain.push_back(sub.size());
  Json steps = Json::array();
  for (const auto& step : data.steps) {
    Json decomposition = Json::array();
    for (const auto& [kind, mult] : step.decomposition)
      decomposition.push_back(factor_entry(kind, mult));
    steps.push_back(Json{{"lower", step.lower_order},
                         {"upper", step.upper_order},
                         {"factor_order", step.factor.order()},
                         {"decomposition", std::move(decomposition)}});
  }
  Json factors = Json::array();
  for (const auto& [kind, mult] : data.factors())
    factors.push_back(factor_entry(kind, mult));
  emit_report("series", loop_fingerprint(loop),
              Json{{"chain", std::move(chain)},
                   {"steps", std::move(steps)},
                   {"factors", std::move(factors)}});
  std::cerr << "chief chain of " << data.chain.size() << " subloops\n";
  return 0;
}

int run_sylow(const std::string& path, std::int64_t p, bool quasi) {
  FiniteLoop loop = moufang::read_loop_file(path);
  moufang::SylowVerdict verdict = moufang::sylow_verdict(loop, p);
  Json results{{"p", p},
               {"sylow", verdict.sylow},
               {"obstructions", verdict.witnesses}};
  int code = 0;
  if (quasi) {
    results["quasi_order"] = moufang::quasi_sylow_order(loop, p);
    moufang::Subloop sub = moufang::find_quasi_p_sylow(loop, p);
    results["subloop_order"] = sub.size();
    results["subloop"] = sub.elements();
  } else if (verdict.sylow) {
    moufang::Subloop sub = moufang::find_p_sylow(loop, p);
    results["subloop_order"] = sub.size();
    results["subloop"] = sub.elements();
  } else {
    code = 1;
  }
  emit_report("sylow", loop_fingerprint(loop), std::move(results));
  std::cerr << "p=" << p << (verdict.sylow ? " is" : " is not")
            << " a Sylow prime\n";
  return code;
}

int run_radical(const std::string& path, std::optional<std::int64_t> p) {
  FiniteLoop loop = moufang::read_loop_file(path);
  moufang::Subloop sub =
      p ? moufang::gr_p(loop, *p) : moufang::group_type_radical(loop);
  Json results{{"kind", p ? "p-radical" : "group-type"},
               {"order", sub.size()},
               {"elements", sub.elements()}};
  if (p) results["p"] = *p;
  emit_report("radical", loop_fingerprint(loop), std::move(results));
  std::cerr << "radical order " << sub.size() << "\n";
  return 0;
}

int run_triality(const std::string& archetype, bool extract) {
  moufang::TrialityGroup group = build_archetype(archetype);
  moufang::TrialityReport report = moufang::verify_triality(group);
  Json results{{"archetype", archetype},
               {"name", group.name()},
               {"size", group.size()},
               {"automorphisms", report.automorphism_ok},
               {"relations", report.relations_ok},
               {"identity", report.identity_ok},
               {"triality", report.ok()},
               {"coset_index", report.coset_index}};
  if (report.violating) results["violating"] = group.label(*report.violating);
  if (extract && report.loop)
    results["loop"] = Json::parse(moufang::loop_to_json_text(*report.loop));
  emit_report("triality", Json{{"archetype", archetype}}, std::move(results));
  std::cerr << (report.ok() ? "triality holds" : "triality fails") << "\n";
  return report.ok() ? 0 : 1;
}

int run_mlt(const std::string& path, bool inner) {
  FiniteLoop loop = moufang::read_loop_file(path);
  moufang::PermGroup mlt = moufang::multiplication_group(loop);
  Json results{{"order", mlt.order().str()},
               {"degree", mlt.degree()},
               {"transitive", mlt.is_transitive()}};
  if (inner) {
    moufang::PermGroup inn = moufang::inner_mapping_group(loop);
    results["inner_order"] = inn.order().str();
  }
  emit_report("mlt", loop_fingerprint(loop), std::move(results));
  std::cerr << "multiplication group order " << mlt.order().str() << "\n";
  return 0;
}

int run_psinn(const std::string& path) {
  FiniteLoop loop = moufang::read_loop_file(path);
  moufang::PsInnResult result = moufang::psinn_group(loop);
  emit_report("psinn", loop_fingerprint(loop),
              Json{{"order", result.elements.size()},
                   {"generators", result.generator_count}});
  std::cerr << "pseudoinner group order " << result.elements.size() << "\n";
  return 0;
}

int run_modules(std::optional<int> chi) {
  Json rows = Json::array();
  bool all_match = true;
  for (auto [c, i] : moufang::table1_rows()) {
    if (chi && *chi != c) continue;
    moufang::S3Module mod = moufang::table1_module(c, i);
    bool relations = moufang::s3_relations_hold(mod);
    bool triality = relations && moufang::is_triality_module(mod);
    bool expected = moufang::table1_expected(c, i);
    all_match = all_match && relations && triality == expected;
    rows.push_back(Json{{"name", mod.name},
                        {"chi", c},
                        {"index", i},
                        {"characteristic", mod.characteristic},
                        {"dim", mod.dim},
                        {"relations", relations},
                        {"triality", triality},
                        {"expected", expected}});
  }
  emit_report("modules", Json{{"chi", chi ? Json(*chi) : Json(nullptr)}},
              Json{{"rows", std::move(rows)}, {"all_match", all_match}});
  std::cerr << (all_match ? "all rows match" : "row mismatch") << "\n";
  return all_match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Moufang loop toolkit"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed,
                 "seed echo for scripted runs; searches are deterministic");

  std::string construct_name, construct_out;
  CLI::App* construct =
      app.add_subcommand("construct", "build a named loop table");
  construct->add_option("name", construct_name, "construction name")
      ->required();
  construct->add_option("-o,--output", construct_out,
                        "write the table here instead of standard output");

  std::string check_path;
  CLI::App* check = app.add_subcommand("check", "validate a loop file");
  check->add_option("file", check_path, "loop file, - for standard input")
      ->required();

  std::string series_path;
  CLI::App* series = app.add_subcommand("series", "chief series and factors");
  series->add_option("file", series_path, "loop file")->required();

  std::string sylow_path;
  std::int64_t sylow_p = 0;
  bool sylow_quasi = false;
  CLI::App* sylow = app.add_subcommand("sylow", "Sylow verdict and subloop");
  sylow->add_option("file", sylow_path, "loop file")->required();
  sylow->add_option("-p,--prime", sylow_p, "prime to test")->required();
  sylow->add_flag("--quasi", sylow_quasi, "find a quasi-p-Sylow subloop");

  std::string radical_path;
  bool radical_gr = false;
  std::int64_t radical_p = 0;
  CLI::App* radical = app.add_subcommand("radical", "group-type or p radical");
  radical->add_option("file", radical_path, "loop file")->required();
  CLI::Option* gr_opt =
      radical->add_flag("--gr", radical_gr, "group-type radical (default)");
  CLI::Option* grp_opt =
      radical->add_option("--grp", radical_p, "p radical for this prime");
  gr_opt->excludes(grp_opt);

  std::string triality_arch;
  bool triality_extract = false;
  CLI::App* triality =
      app.add_subcommand("triality", "verify a named triality archetype");
  triality->add_option("archetype", triality_arch, "archetype name")
      ->required();
  triality->add_flag("--extract-loop", triality_extract,
                     "embed the extracted loop table in the report");

  std::string mlt_path;
  bool mlt_inner = false;
  CLI::App* mlt = app.add_subcommand("mlt", "multiplication group order");
  mlt->add_option("file", mlt_path, "loop file")->required();
  mlt->add_flag("--inner", mlt_inner, "also the inner mapping group");

  std::string psinn_path;
  CLI::App* psinn =
      app.add_subcommand("psinn", "pseudoautomorphism inner group order");
  psinn->add_option("file", psinn_path, "loop file")->required();

  int modules_chi = -1;
  CLI::App* modules =
      app.add_subcommand("modules", "module catalog verdicts");
  modules->add_option("--chi", modules_chi, "restrict to one characteristic")
      ->check(CLI::IsMember({0, 2, 3}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  (void)seed;

  const auto started = std::chrono::steady_clock::now();
  int code = 2;
  try {
    if (construct->parsed()) {
      code = run_construct(construct_name, construct_out);
    } else if (check->parsed()) {
      code = run_check(check_path);
    } else if (series->parsed()) {
      code = run_series(series_path);
    } else if (sylow->parsed()) {
      code = run_sylow(sylow_path, sylow_p, sylow_quasi);
    } else if (radical->parsed()) {
      code = run_radical(radical_path,
                         grp_opt->count() > 0 ? std::optional<std::int64_t>(radical_p)
                                  : std::nullopt);
    } else if (triality->parsed()) {
      code = run_triality(triality_arch, triality_extract);
    } else if (mlt->parsed()) {
      code = run_mlt(mlt_path, mlt_inner);
    } else if (psinn->parsed()) {
      code = run_psinn(psinn_path);
    } else if (modules->parsed()) {
      code = run_modules(modules_chi >= 0 ? std::optional<int>(modules_chi)
                                          : std::nullopt);
    }
  } catch (const moufang::MoufangError& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = exit_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = 2;
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - started)
                        .count();
  std::fprintf(stderr, "completed in %.1f ms\n", ms);
  return code;
}
