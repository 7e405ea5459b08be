#include "orbitope/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbitope/eulerian.hpp"
#include "orbitope/hvector.hpp"
#include "orbitope/oracle.hpp"
#include "orbitope/verify.hpp"

namespace orbitope::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { kText, kJson, kCsv, kLatex };

struct RunConfig {
  std::string command;
  int n = -1;
  std::optional<std::string> j_text;
  std::optional<int> k;
  std::string suite;
  int max_n = 0;
  Format format = Format::kText;
  bool dump = false;
  std::optional<int> guard_n;
};

struct Table {
  std::string index_header;
  std::string value_header;
  std::vector<std::string> values;
};

std::vector<std::string> strings_of(const std::vector<Integer>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

std::string spaced(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + v[i];
  return out;
}

void write_csv(const Table& t, std::ostream& out) {
  out << t.index_header << ',' << t.value_header << '\n';
  for (std::size_t i = 0; i < t.values.size(); ++i) out << i << ',' << t.values[i] << '\n';
}

void write_latex(const Table& t, std::ostream& out) {
  out << "\\begin{tabular}{rr}\n$" << t.index_header << "$ & $" << t.value_header << "$ \\\\\n\\hline\n";
  for (std::size_t i = 0; i < t.values.size(); ++i) out << i << " & " << t.values[i] << " \\\\\n";
  out << "\\end{tabular}\n";
}

struct Subject {
  SimpleSubset j;
  Classification cls;
};

Subject resolve_subject(const RunConfig& cfg) {
  if (cfg.n < 1 || cfg.n > kMaxRank) throw InputError("--n must lie in 1.." + std::to_string(kMaxRank));
  if (cfg.j_text.has_value() == cfg.k.has_value()) throw InputError("supply exactly one of --j or --k");
  const SimpleSubset j = cfg.k ? SimpleSubset::tail(cfg.n, *cfg.k) : parse_subset(cfg.n, *cfg.j_text);
  return {j, classify_combinatorially_smooth(cfg.n, j)};
}

Json header(const RunConfig& cfg, const Subject& s) {
  Json doc;
  doc["version"] = kVersion;
  doc["command"] = cfg.command;
  doc["n"] = cfg.n;
  doc["j"] = s.j.members();
  if (cfg.k) doc["k"] = *cfg.k;
  doc["smooth"] = s.cls.smooth;
  doc["form"] = std::string(to_string(s.cls.form));
  return doc;
}

void write_text_header(const RunConfig& cfg, const Subject& s, std::ostream& out) {
  out << "n: " << cfg.n << '\n' << "J: " << to_string(s.j) << '\n';
  if (cfg.k) out << "k: " << *cfg.k << '\n';
  out << "form: " << to_string(s.cls.form) << '\n' << "smooth: " << (s.cls.smooth ? "true" : "false") << '\n';
}

void emit(const RunConfig& cfg, const Subject& s, const Json& doc, const Table& table,
          const std::vector<std::string>& text_lines, std::ostream& out) {
  switch (cfg.format) {
    case Format::kJson: out << doc.dump() << '\n'; break;
    case Format::kCsv: write_csv(table, out); break;
    case Format::kLatex: write_latex(table, out); break;
    case Format::kText:
      write_text_header(cfg, s, out);
      for (const auto& line : text_lines) out << line << '\n';
      break;
  }
}

int cmd_eulerian(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n < 0) throw InputError("--n must be nonnegative");
  const auto coeffs = eulerian_polynomial(cfg.n).coefficient_strings();
  Json doc;
  doc["version"] = kVersion;
  doc["command"] = cfg.command;
  doc["n"] = cfg.n;
  doc["eulerian"] = coeffs;
  switch (cfg.format) {
    case Format::kJson: out << doc.dump() << '\n'; break;
    case Format::kCsv: write_csv({"degree", "coefficient", coeffs}, out); break;
    case Format::kLatex: write_latex({"i", "E(" + std::to_string(cfg.n) + ",i)", coeffs}, out); break;
    case Format::kText: out << spaced(coeffs) << '\n'; break;
  }
  return kOk;
}

int cmd_hvec(const RunConfig& cfg, std::ostream& out) {
  const Subject s = resolve_subject(cfg);
  const auto h = h_polynomial_lattice(cfg.n, s.j).coeffs.coefficient_strings();
  Json doc = header(cfg, s);
  doc["h"] = h;
  emit(cfg, s, doc, {"i", "h_i", h}, {"h: " + spaced(h)}, out);
  return kOk;
}

int cmd_fvec(const RunConfig& cfg, std::ostream& out) {
  const Subject s = resolve_subject(cfg);
  const auto f = strings_of(f_vector_lattice(cfg.n, s.j).counts);
  Json doc = header(cfg, s);
  doc["f"] = f;
  emit(cfg, s, doc, {"i", "f_i", f}, {"f: " + spaced(f)}, out);
  return kOk;
}

int cmd_poincare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Subject s = resolve_subject(cfg);
  const PoincareResult p = poincare(cfg.n, s.j);
  if (p.warning)
    err << "warning: J = " << to_string(s.j)
        << " is not combinatorially smooth; coefficients are not Betti numbers\n";
  const auto betti = strings_of(p.betti);
  Json doc = header(cfg, s);
  doc["poincare"] = p.poincare.coefficient_strings();
  doc["betti"] = betti;
  emit(cfg, s, doc, {"i", "b_i", betti},
       {"poincare: " + p.poincare.to_string(), "betti: " + spaced(betti)}, out);
  return kOk;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const Subject s = resolve_subject(cfg);
  const Json doc = header(cfg, s);
  switch (cfg.format) {
    case Format::kJson: out << doc.dump() << '\n'; break;
    case Format::kCsv:
      out << "n,j,form,smooth\n"
          << cfg.n << ",\"" << to_string(s.j) << "\"," << to_string(s.cls.form) << ','
          << (s.cls.smooth ? "true" : "false") << '\n';
      break;
    case Format::kLatex:
      out << "\\begin{tabular}{rlll}\n$n$ & $J$ & form & smooth \\\\\n\\hline\n"
          << cfg.n << " & $\\{" << to_string(s.j).substr(1, to_string(s.j).size() - 2) << "\\}$ & "
          << to_string(s.cls.form) << " & " << (s.cls.smooth ? "yes" : "no") << " \\\\\n\\end{tabular}\n";
      break;
    case Format::kText: write_text_header(cfg, s, out); break;
  }
  return kOk;
}

oracle::Limits limits_for(const RunConfig& cfg) {
  oracle::Limits limits = oracle::Limits::from_environment();
  if (cfg.guard_n) {
    limits.max_orbit_rank = std::max(limits.max_orbit_rank, *cfg.guard_n);
    limits.max_lattice_rank = std::max(limits.max_lattice_rank, *cfg.guard_n);
  }
  return limits;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  const Subject s = resolve_subject(cfg);
  const auto limits = limits_for(cfg);
  const auto pts = oracle::orbit_points(oracle::canonical_weight(cfg.n, s.j), limits);
  const auto lattice = oracle::enumerate_face_lattice(pts, limits);
  const auto f = strings_of(lattice.f_vector().counts);
  const bool has_simple = lattice.dimension() >= 1;
  const bool simple = has_simple && oracle::is_simple(lattice);

  std::ostringstream dump;
  if (cfg.dump) oracle::dump_face_lattice(lattice, dump);

  Json doc = header(cfg, s);
  doc["f"] = f;
  if (has_simple) doc["simple"] = simple;
  doc["vertices"] = pts.size();
  if (cfg.dump) {
    std::vector<std::string> lines;
    std::istringstream in(dump.str());
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    doc["faces"] = lines;
  }

  std::vector<std::string> text{"vertices: " + std::to_string(pts.size()), "f: " + spaced(f)};
  if (has_simple) text.push_back(std::string("simple: ") + (simple ? "true" : "false"));
  emit(cfg, s, doc, {"i", "f_i", f}, text, out);
  if (cfg.dump && cfg.format == Format::kText) out << dump.str();
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const SuiteResult r = run_suite(cfg.suite, cfg.max_n, limits_for(cfg));
  const std::string summary = r.name + ": " + std::to_string(r.passed()) + "/" +
                              std::to_string(r.instances.size()) + " instances pass";
  switch (cfg.format) {
    case Format::kJson: {
      Json doc;
      doc["version"] = kVersion;
      doc["command"] = cfg.command;
      doc["n"] = cfg.max_n;
      Json instances = Json::array();
      for (const auto& inst : r.instances) {
        Json i;
        i["key"] = inst.key;
        i["pass"] = inst.pass;
        if (inst.expected) i["expected"] = *inst.expected;
        if (inst.got) i["got"] = *inst.got;
        instances.push_back(std::move(i));
      }
      doc["suite"] = {{"name", r.name}, {"instances", std::move(instances)}};
      out << doc.dump() << '\n';
      break;
    }
    case Format::kCsv:
      out << "key,pass,expected,got\n";
      for (const auto& inst : r.instances)
        out << '"' << inst.key << "\"," << (inst.pass ? "true" : "false") << ",\""
            << inst.expected.value_or("") << "\",\"" << inst.got.value_or("") << "\"\n";
      break;
    case Format::kLatex:
      out << "\\begin{tabular}{ll}\ninstance & result \\\\\n\\hline\n";
      for (const auto& inst : r.instances)
        out << "\\texttt{" << inst.key << "} & " << (inst.pass ? "pass" : "FAIL") << " \\\\\n";
      out << "\\end{tabular}\n";
      break;
    case Format::kText:
      for (const auto& inst : r.instances) {
        out << r.name << ' ' << inst.key << ": " << (inst.pass ? "pass" : "FAIL");
        if (!inst.pass) out << " (expected " << inst.expected.value_or("?") << ", got " << inst.got.value_or("?") << ')';
        out << '\n';
      }
      out << summary << '\n';
      break;
  }
  return r.all_pass() ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Face numbers, h-polynomials and Betti numbers of A_n orbit polytopes", "orbitope"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  RunConfig cfg;
  const std::map<std::string, Format> formats{
      {"text", Format::kText}, {"json", Format::kJson}, {"csv", Format::kCsv}, {"latex", Format::kLatex}};

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text, json, csv or latex")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  auto add_subject = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "rank of A_n")->required();
    auto* j = sub->add_option("--j", cfg.j_text, "subset of simple reflections: \"s4,s5\", \"4,5\" or \"empty\"");
    auto* k = sub->add_option("--k", cfg.k, "use J(k,n) = {s_(n-k+1), ..., s_n}");
    j->excludes(k);
    add_format(sub);
  };
  auto add_guard = [&](CLI::App* sub) {
    sub->add_option("--guard-n", cfg.guard_n, "raise the brute-force size guards to this rank");
  };

  auto* eulerian = app.add_subcommand("eulerian", "Eulerian polynomial E_n");
  eulerian->add_option("--n", cfg.n, "n")->required();
  add_format(eulerian);

  auto* hvec = app.add_subcommand("hvec", "h-polynomial from the cross-section lattice");
  add_subject(hvec);
  auto* fvec = app.add_subcommand("fvec", "f-vector from the cross-section lattice");
  add_subject(fvec);
  auto* poinc = app.add_subcommand("poincare", "Poincaré polynomial h(t^2) and Betti numbers");
  add_subject(poinc);
  auto* classify = app.add_subcommand("classify", "combinatorial smoothness form of J");
  add_subject(classify);

  auto* orc = app.add_subcommand("oracle", "geometric face-lattice enumeration");
  add_subject(orc);
  orc->add_flag("--dump", cfg.dump, "print every face");
  add_guard(orc);

  auto* verify = app.add_subcommand("verify", "run an identity family over a range of ranks");
  verify->add_option("--suite", cfg.suite, "thm4, thm5, thm6, cor4, id14, oracle or symmetry")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-n", cfg.max_n, "largest rank")->required()->check(CLI::PositiveNumber);
  add_format(verify);
  add_guard(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
    if (cfg.command == "eulerian") return cmd_eulerian(cfg, out);
    if (cfg.command == "hvec") return cmd_hvec(cfg, out);
    if (cfg.command == "fvec") return cmd_fvec(cfg, out);
    if (cfg.command == "poincare") return cmd_poincare(cfg, out, err);
    if (cfg.command == "classify") return cmd_classify(cfg, out);
    if (cfg.command == "oracle") return cmd_oracle(cfg, out);
    return cmd_verify(cfg, out);
  } catch (const GuardError& e) {
    err << "error: " << e.what() << '\n';
    return kGuardViolation;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace orbitope::cli
