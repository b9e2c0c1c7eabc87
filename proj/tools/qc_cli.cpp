#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qc/factorseq.hpp"
#include "qc/schubert.hpp"
#include "qc/stanley.hpp"

using json = nlohmann::ordered_json;

namespace {

json partition_json(const qc::Partition& p) {
  json arr = json::array();
  for (int v : p.parts()) arr.push_back(v);
  return arr;
}

json schur_json(const qc::SchurElement& f) {
  json obj = json::object();
  for (const auto& [shape, c] : f.terms())
    obj[shape.str()] = c.str();
  return obj;
}

json tensor_json(const qc::TensorElement& p) {
  json arr = json::array();
  for (const auto& [key, c] : p.terms()) {
    json shapes = json::array();
    for (const auto& sh : key.entries()) shapes.push_back(partition_json(sh));
    arr.push_back({{"shapes", shapes}, {"coeff", c.str()}});
  }
  return arr;
}

int fail_input(const std::string& message) {
  std::cerr << "input error: " << message << "\n";
  return 2;
}

int cmd_stanley(const std::string& wtext, bool as_json) {
  qc::SchurElement f = qc::stanley_function(qc::Permutation::parse(wtext));
  if (as_json) std::cout << schur_json(f).dump() << "\n";
  else std::cout << f.str() << "\n";
  return 0;
}

int cmd_schubert(const std::string& wtext, bool use_y,
                 const std::string& vars, bool compare, bool as_json) {
  qc::Permutation w = qc::Permutation::parse(wtext);
  int nx = 0, ny = -1;
  if (!vars.empty()) {
    std::size_t comma = vars.find(',');
    nx = std::stoi(vars.substr(0, comma));
    if (comma != std::string::npos) ny = std::stoi(vars.substr(comma + 1));
  }
  if (nx == 0) nx = w.size() - 1;
  if (ny < 0) ny = use_y ? nx : 0;
  int nvars = std::max(nx, std::max(ny, w.size() - 1));
  qc::Polynomial assembled = qc::assemble_schubert(w, nvars);
  bool matches = true;
  if (compare || !use_y) {
    qc::Polynomial oracle = qc::schubert_oracle(w, nvars, true);
    matches = assembled == oracle;
  }
  qc::Polynomial out = assembled.resized(nx, use_y ? ny : 0);
  if (as_json) {
    json obj;
    obj["permutation"] = wtext;
    obj["polynomial"] = out.str();
    if (compare) obj["oracle_match"] = matches;
    std::cout << obj.dump() << "\n";
  } else {
    std::cout << out.str() << "\n";
    if (compare)
      std::cout << "oracle: " << (matches ? "match" : "MISMATCH") << "\n";
  }
  return compare && !matches ? 1 : 0;
}

int cmd_quiver(const std::string& path, bool as_json) {
  std::ifstream in(path);
  if (!in) return fail_input("cannot open rank-conditions file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  qc::RankConditions r = qc::RankConditions::parse(buf.str());
  if (!r.valid())
    return fail_input("rank conditions cannot occur (occurrence conditions)");
  qc::TensorElement p = qc::compute_P(r);
  if (as_json) std::cout << tensor_json(p).dump() << "\n";
  else {
    std::cout << "d(r) = " << r.expected_codim() << "\n";
    for (const auto& [key, c] : p.terms())
      std::cout << c.str() << "  " << key.str() << "\n";
  }
  return 0;
}

int cmd_coeffs(const std::string& wtext, bool as_json) {
  auto table = qc::quiver_coefficients(qc::Permutation::parse(wtext));
  json arr = json::array();
  for (const auto& [key, c] : table) {
    if (as_json) {
      json a = json::array(), b = json::array();
      for (int v : key.a) a.push_back(v);
      for (int v : key.b) b.push_back(v);
      arr.push_back({{"a", a},
                     {"b", b},
                     {"lambda", partition_json(key.lambda)},
                     {"coeff", c.str()}});
    } else {
      std::cout << "a=(";
      for (std::size_t k = 0; k < key.a.size(); ++k)
        std::cout << (k ? "," : "") << key.a[k];
      std::cout << ") b=(";
      for (std::size_t k = 0; k < key.b.size(); ++k)
        std::cout << (k ? "," : "") << key.b[k];
      std::cout << ") lambda=" << key.lambda.str() << "  " << c.str() << "\n";
    }
  }
  if (as_json) std::cout << arr.dump() << "\n";
  return 0;
}

int cmd_reduced_words(const std::string& wtext, bool list, bool as_json) {
  auto words = qc::reduced_words(qc::Permutation::parse(wtext));
  if (as_json) {
    json obj;
    obj["count"] = words.size();
    if (list) {
      json arr = json::array();
      for (const auto& word : words) arr.push_back(word);
      obj["words"] = arr;
    }
    std::cout << obj.dump() << "\n";
    return 0;
  }
  if (!list) {
    std::cout << words.size() << "\n";
    return 0;
  }
  for (const auto& word : words) {
    for (std::size_t k = 0; k < word.size(); ++k)
      std::cout << (k ? " " : "") << word[k];
    std::cout << "\n";
  }
  return 0;
}

int cmd_factorseq(const std::string& wtext, bool check, bool as_json) {
  qc::Permutation w = qc::Permutation::parse(wtext);
  qc::RankConditions r = qc::rank_conditions_of(w);
  qc::ConjectureReport report = qc::conjecture_check(r);
  json obj = json::object();
  bool all = report.all_match();
  for (const auto& [key, entry] : report.entries)
    obj[key.str()] = {{"factor_count", entry.factor_count.str()},
                      {"coefficient", entry.coefficient.str()},
                      {"match", entry.match()}};
  if (as_json) std::cout << obj.dump() << "\n";
  else {
    for (const auto& [key, entry] : report.entries)
      std::cout << key.str() << "  factor_count=" << entry.factor_count.str()
                << " coefficient=" << entry.coefficient.str()
                << (entry.match() ? "" : "  MISMATCH") << "\n";
    if (check)
      std::cout << (all ? "conjecture verified" : "conjecture MISMATCH")
                << "\n";
  }
  return check && !all ? 1 : 0;
}

struct SuiteResult {
  int failures = 0;
  void item(const std::string& name, bool ok) {
    std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  }
};

int cmd_verify(const std::string& suite) {
  int m;
  if (suite == "s3") m = 3;
  else if (suite == "s4") m = 4;
  else if (suite == "s5") m = 5;
  else return fail_input("unknown suite " + suite + " (use s3|s4|s5)");
  SuiteResult res;
  for (const qc::Permutation& w : qc::symmetric_group(m)) {
    qc::RankConditions r = qc::rank_conditions_of(w);
    res.item("d(r) = l(w) for " + w.str(),
             r.expected_codim() == w.length());
    res.item("reduced word count for " + w.str(),
             qc::reduced_word_count_via_stanley(w) ==
                 qc::Int(qc::reduced_words(w).size()));
    res.item("extremal structure for " + w.str(), qc::extremal_check(w));
    if (m <= 4) {
      res.item("oracle match for " + w.str(),
               qc::assemble_schubert(w, m - 1) ==
                   qc::schubert_oracle(w, m - 1, true));
      res.item("factor sequences for " + w.str(),
               qc::conjecture_check(r).all_match());
    }
  }
  std::cout << (res.failures ? "FAILED" : "VERIFIED") << " (" << suite << ")"
            << "\n";
  return res.failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quiver coefficients, Schubert polynomials and Stanley "
               "symmetric functions in exact arithmetic"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "JSON output");

  std::string wtext, rank_file, suite, vars;
  bool use_y = false, compare = false, list = false, count = false,
       check = false;

  auto* stanley = app.add_subcommand("stanley", "Stanley symmetric function");
  stanley->add_option("w", wtext)->required();

  auto* schubert =
      app.add_subcommand("schubert", "Schubert polynomial assembled from "
                                     "quiver coefficients");
  schubert->add_option("w", wtext)->required();
  schubert->add_flag("--double", use_y, "double polynomial (x and y)");
  schubert->add_option("--vars", vars, "variable count N or N,M");
  schubert->add_flag("--compare", compare, "compare with the oracle");

  auto* quiver = app.add_subcommand("quiver", "quiver coefficients of a "
                                              "rank-conditions file");
  quiver->add_option("rank-file", rank_file)->required();

  auto* coeffs = app.add_subcommand("coeffs", "c_w(a,b,lambda) table");
  coeffs->add_option("w", wtext)->required();

  auto* words = app.add_subcommand("reduced-words", "reduced words of w");
  words->add_option("w", wtext)->required();
  words->add_flag("--count", count);
  words->add_flag("--list", list);

  auto* fseq = app.add_subcommand("factorseq", "factor-sequence counts");
  fseq->add_option("w", wtext)->required();
  fseq->add_flag("--check", check);

  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->add_option("--suite", suite, "s3|s4|s5")->required();

  // let --json appear after the subcommand name
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(stanley)) return cmd_stanley(wtext, as_json);
    if (app.got_subcommand(schubert))
      return cmd_schubert(wtext, use_y, vars, compare, as_json);
    if (app.got_subcommand(quiver)) return cmd_quiver(rank_file, as_json);
    if (app.got_subcommand(coeffs)) return cmd_coeffs(wtext, as_json);
    if (app.got_subcommand(words))
      return cmd_reduced_words(wtext, list && !count, as_json);
    if (app.got_subcommand(fseq)) return cmd_factorseq(wtext, check, as_json);
    if (app.got_subcommand(verify)) return cmd_verify(suite);
  } catch (const std::exception& e) {
    return fail_input(e.what());
  }
  return 2;
}
