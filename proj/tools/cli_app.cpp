#include "cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qbb/limit.hpp"
#include "qbb/modules.hpp"
#include "qbb/primitive.hpp"
#include "qbb/straighten.hpp"

namespace qbb::cli {

namespace {

using Json = nlohmann::ordered_json;

// Raised for bad command-line arguments.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::set<std::string> kKnownKeys{"I", "A", "r", "L", "nu", "max_ht", "format"};
const std::set<std::string> kFormats{"json", "csv", "pretty"};

int resolve_index(const std::vector<std::string>& names, const std::string& token) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == token) return static_cast<int>(i);
  }
  if (!token.empty() && std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    const int i = std::stoi(token);
    if (i < static_cast<int>(names.size())) return i;
  }
  return -1;
}

template <class T>
std::optional<T> read_key(const Json& doc, const std::string& key, const std::string& what, std::vector<Diagnostic>& diags) {
  if (!doc.contains(key)) return std::nullopt;
  try {
    return doc.at(key).get<T>();
  } catch (const Json::exception&) {
    diags.push_back({ErrorCode::ValidationError, "key " + key + " must be " + what});
    return std::nullopt;
  }
}

std::string join(const std::vector<int>& v, char sep) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? std::string(1, sep) : "") + std::to_string(v[k]);
  return s;
}

Json diagnostics_json(const std::vector<Diagnostic>& diags) {
  Json arr = Json::array();
  for (const auto& d : diags) arr.push_back({{"code", std::string(to_string(d.code))}, {"message", d.message}});
  return arr;
}

void render_pretty(const Json& j, int indent, std::ostream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        out << pad << k << ":\n";
        render_pretty(v, indent + 2, out);
      } else {
        out << pad << k << ": " << (v.is_structured() ? v.dump() : scalar(v)) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured() && !v.empty()) {
        out << pad << "-\n";
        render_pretty(v, indent + 2, out);
      } else {
        out << pad << "- " << scalar(v) << "\n";
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

void emit(const Json& j, const std::string& format, std::ostream& out) {
  if (format == "pretty") {
    render_pretty(j, 0, out);
  } else {
    out << j.dump(2) << "\n";
  }
}

std::string read_source(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Engines {
  explicit Engines(const EngineConfig& cfg) : form(cfg.datum, cfg.nu), st(form), prim(form) { form.set_max_ht(cfg.max_ht); }
  LForm form;
  Straightener st;
  Primitives prim;
};

int require_index(const CartanDatum& d, const std::string& token) {
  const int i = resolve_index(d.names(), token);
  if (i < 0) throw UsageError("unknown index " + token);
  return i;
}

void require_level(const CartanDatum& d, int i, int l) {
  const int top = d.is_real(i) ? 1 : d.cutoff(i);
  if (l < 1 || l > top) throw UsageError("level " + std::to_string(l) + " outside 1.." + std::to_string(top));
}

Weight parse_weight(const CartanDatum& d, const std::vector<int>& h, const std::vector<int>& dd) {
  const auto n = static_cast<std::size_t>(d.rank());
  if (h.size() != n) throw UsageError("--lambda needs " + std::to_string(n) + " values");
  if (!dd.empty() && dd.size() != n) throw UsageError("--lambda-d needs " + std::to_string(n) + " values");
  Weight w = Weight::zero(d.rank());
  w.h = h;
  if (!dd.empty()) w.d = dd;
  return w;
}

ModuleMode parse_mode(const std::string& m) {
  if (m == "verma") return ModuleMode::Verma;
  if (m == "quotient") return ModuleMode::Quotient;
  throw UsageError("mode must be verma or quotient");
}

Json table_json(const DimTable& t, const CartanDatum& d, bool classical) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json row{{"beta", r.beta.k}, {"mu_h", r.mu.h}, {"mu_d", r.mu.d}, {"quantum", r.quantum}};
    if (classical) {
      row["classical"] = r.classical;
      row["equal"] = r.classical == r.quantum;
    }
    Json basis = Json::array();
    for (WordId w : r.basis) basis.push_back(word_string(w, Alphabet::F, d));
    row["basis"] = basis;
    rows.push_back(row);
  }
  Json omitted = Json::array();
  for (const auto& b : t.omitted) omitted.push_back(b.k);
  Json out{{"lambda_h", t.lambda.h}, {"lambda_d", t.lambda.d}, {"mode", mode_name(t.mode)}, {"depth", t.depth}, {"rows", rows},
           {"omitted", omitted}};
  if (!t.assumption.empty()) out["assumption"] = t.assumption;
  if (classical) out["equal"] = t.equal();
  return out;
}

void table_csv(const DimTable& t, bool classical, std::ostream& out) {
  out << "beta,mu_h,mu_d,quantum" << (classical ? ",classical" : "") << ",status\n";
  for (const auto& r : t.rows) {
    out << join(r.beta.k, ';') << "," << join(r.mu.h, ';') << "," << join(r.mu.d, ';') << "," << r.quantum;
    if (classical) out << "," << r.classical;
    out << "," << (!classical || r.classical == r.quantum ? "ok" : "mismatch") << "\n";
  }
  for (const auto& b : t.omitted) out << join(b.k, ';') << ",,,," << (classical ? "," : "") << "omitted\n";
}

}  // namespace

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::RegularityFailure:
    case ErrorCode::NotRegular:
    case ErrorCode::InconsistentSystem:
    case ErrorCode::DivisionByZero:
      return 1;
    default:
      return 2;
  }
}

EngineConfig parse_config(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "config must be a JSON object");

  std::vector<Diagnostic> diags;
  for (const auto& [k, v] : doc.items()) {
    if (kKnownKeys.count(k) == 0) diags.push_back({ErrorCode::ValidationError, "unknown key " + k});
  }
  EngineConfig cfg;
  const auto a = read_key<std::vector<std::vector<int>>>(doc, "A", "a square integer matrix", diags);
  if (!doc.contains("A")) diags.push_back({ErrorCode::ValidationError, "missing key A"});
  const auto names = read_key<std::vector<std::string>>(doc, "I", "a list of index names", diags);
  const auto r = read_key<std::vector<int>>(doc, "r", "a list of positive integers", diags);
  if (auto h = read_key<int>(doc, "max_ht", "an integer", diags)) {
    if (*h < 1) diags.push_back({ErrorCode::ValidationError, "max_ht must be >= 1"});
    cfg.max_ht = *h;
  }
  if (auto f = read_key<std::string>(doc, "format", "a string", diags)) {
    if (kFormats.count(*f) == 0) diags.push_back({ErrorCode::ValidationError, "format must be json, csv or pretty"});
    cfg.format = *f;
  }

  std::optional<CartanDatum> datum;
  if (a) {
    const std::size_t n = a->size();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(names && i < names->size() ? (*names)[i] : std::to_string(i));
    std::optional<std::vector<int>> cut;
    if (doc.contains("L")) {
      const Json& lj = doc.at("L");
      if (lj.is_array()) {
        cut = read_key<std::vector<int>>(doc, "L", "a list of integers or an object", diags);
      } else if (lj.is_object()) {
        std::vector<int> c(n, 6);
        for (std::size_t i = 0; i < n; ++i) {
          if (i < (*a)[i].size() && (*a)[i][i] == 2) c[i] = 1;
        }
        for (const auto& [k, v] : lj.items()) {
          const int i = resolve_index(labels, k);
          if (i < 0) {
            diags.push_back({ErrorCode::ValidationError, "L names unknown index " + k});
          } else if (!v.is_number_integer()) {
            diags.push_back({ErrorCode::ValidationError, "L entry for " + k + " must be an integer"});
          } else {
            c[static_cast<std::size_t>(i)] = v.get<int>();
          }
        }
        cut = c;
      } else {
        diags.push_back({ErrorCode::ValidationError, "key L must be a list of integers or an object"});
      }
    }
    try {
      datum = validate_datum(*a, r, cut, names);
    } catch (const ValidationFailure& f) {
      diags.insert(diags.end(), f.diagnostics().begin(), f.diagnostics().end());
    } catch (const Error& e) {
      diags.push_back({e.code(), e.what()});
    }
  }

  if (doc.contains("nu")) {
    const Json& nj = doc.at("nu");
    if (!nj.is_object()) {
      diags.push_back({ErrorCode::ValidationError, "key nu must be an object"});
    } else if (datum) {
      for (const auto& [k, v] : nj.items()) {
        const auto comma = k.rfind(',');
        const int i = comma == std::string::npos ? -1 : resolve_index(datum->names(), k.substr(0, comma));
        int l = 0;
        if (comma != std::string::npos) {
          try {
            l = std::stoi(k.substr(comma + 1));
          } catch (const std::exception&) {
            l = 0;
          }
        }
        if (i < 0 || l < 1 || l > (datum->is_real(i) ? 1 : datum->cutoff(i))) {
          diags.push_back({ErrorCode::ValidationError, "nu key " + k + " does not name a generator (i,l) within the cutoffs"});
          continue;
        }
        if (!v.is_string()) {
          diags.push_back({ErrorCode::ValidationError, "nu value for " + k + " must be a string"});
          continue;
        }
        try {
          const RatFunc value = RatFunc::parse(v.get<std::string>());
          const auto bad = check_nu_assumption(value, "(" + k + ")");
          diags.insert(diags.end(), bad.begin(), bad.end());
          if (bad.empty()) cfg.nu.set(i, l, value);
        } catch (const Error& e) {
          diags.push_back({ErrorCode::ValidationError, "nu value for " + k + ": " + e.what()});
        }
      }
    }
  }
  if (!diags.empty()) throw ValidationFailure(diags);
  cfg.datum = *datum;
  return cfg;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in quantum Borcherds-Bozec algebras", "qbb"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  std::string format;
  int max_ht = 0;
  app.add_option("-c,--config", config_path, "JSON config file, or - for stdin")->required();
  app.add_option("--format", format, "json, csv or pretty (overrides the config)")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--max-ht", max_ht, "height bound for enumerations (overrides the config)")->check(CLI::PositiveNumber);

  std::string idx;
  std::string jdx;
  int level = 1;
  int level_k = 1;
  std::vector<int> beta;
  std::vector<int> lambda_h;
  std::vector<int> lambda_d;
  int depth = 4;
  std::string mode = "verma";
  int max_level = 3;
  int closure_level = 4;
  int closure_length = 3;

  auto* validate = app.add_subcommand("validate", "check the config and describe the datum");
  auto* gram = app.add_subcommand("gram", "Gram matrix, rank and radical in one degree");
  gram->add_option("--beta", beta, "degree as coefficients on the simple roots")->required()->delimiter(',');
  auto* dims = app.add_subcommand("dims", "weight-space dimensions of a highest-weight module");
  auto* chr = app.add_subcommand("char", "quantum and classical weight tables side by side");
  for (auto* sub : {dims, chr}) {
    sub->add_option("--lambda", lambda_h, "values lambda(h_i)")->required()->delimiter(',');
    sub->add_option("--lambda-d", lambda_d, "values lambda(d_i)")->delimiter(',');
    sub->add_option("--depth", depth, "largest height of lambda - mu")->check(CLI::NonNegativeNumber);
    sub->add_option("--mode", mode, "verma or quotient");
  }
  auto* primitive = app.add_subcommand("primitive", "primitive generator t_il with its properties");
  auto* tau = app.add_subcommand("tau", "self-pairing tau_il");
  auto* commute = app.add_subcommand("commute", "e_il f_ik - f_ik e_il, closed form against the relations");
  for (auto* sub : {primitive, tau, commute}) {
    sub->add_option("--i", idx, "index name or position")->required();
    sub->add_option("--l", level, "level")->required();
  }
  commute->add_option("--k", level_k, "level of f")->required();
  auto* serre = app.add_subcommand("serre-check", "Serre elements lie in the radical");
  auto* limit = app.add_subcommand("limit-check", "classical limit of the A_1-form");
  limit->add_option("--max-level", max_level, "largest level in relation and Hopf checks");
  limit->add_option("--closure-level", closure_level, "largest total level of closure products");
  limit->add_option("--closure-length", closure_length, "largest number of factors in closure products");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }
  if (chr->parsed() && chr->count("--mode") == 0) mode = "quotient";

  std::string fmt = "json";
  auto fail = [&](ErrorCode code, const std::vector<Diagnostic>& diags, const std::string& message) {
    // Report the most specific code when generic validation messages come first.
    for (const auto& dg : diags) {
      if (dg.code != ErrorCode::ValidationError) {
        code = dg.code;
        break;
      }
    }
    Json j{{"status", "error"}, {"code", std::string(to_string(code))}, {"message", message}, {"errors", diagnostics_json(diags)}};
    emit(j, fmt == "csv" ? "json" : fmt, out);
    return exit_code(code);
  };

  EngineConfig cfg;
  try {
    cfg = parse_config(read_source(config_path));
  } catch (const ValidationFailure& f) {
    return fail(f.code(), f.diagnostics(), "invalid config");
  } catch (const Error& e) {
    return fail(e.code(), {{e.code(), e.what()}}, e.what());
  }
  fmt = format.empty() ? cfg.format : format;
  if (max_ht > 0) cfg.max_ht = max_ht;
  const CartanDatum& d = cfg.datum;

  try {
    const bool tabular = dims->parsed() || chr->parsed();
    if (fmt == "csv" && !tabular) throw UsageError("csv output is available for dims and char only");
    Engines eng(cfg);
    Json j{{"status", "ok"}};
    int code = 0;

    if (validate->parsed()) {
      j["command"] = "validate";
      Json indices = Json::array();
      for (int i = 0; i < d.rank(); ++i) {
        const char* kind = d.is_real(i) ? "real" : (d.is_isotropic(i) ? "isotropic" : "imaginary");
        Json nus = Json::array();
        for (int l = 1; l <= (d.is_real(i) ? 1 : d.cutoff(i)); ++l) nus.push_back(eng.form.nu(i, l).to_string());
        indices.push_back({{"name", d.names()[static_cast<std::size_t>(i)]}, {"kind", kind}, {"r", d.r(i)}, {"cutoff", d.cutoff(i)}, {"nu", nus}});
      }
      j["A"] = d.matrix();
      j["indices"] = indices;
      j["max_ht"] = cfg.max_ht;
    } else if (gram->parsed()) {
      if (beta.size() != static_cast<std::size_t>(d.rank())) throw UsageError("--beta needs " + std::to_string(d.rank()) + " values");
      const GramData& g = eng.form.gram(RootVector(beta));
      j["command"] = "gram";
      j["beta"] = beta;
      Json words = Json::array();
      for (WordId w : g.words) words.push_back(word_string(w, Alphabet::F, d));
      Json matrix = Json::array();
      for (const auto& row : g.gram) {
        Json jr = Json::array();
        for (const auto& c : row) jr.push_back(c.to_string());
        matrix.push_back(jr);
      }
      Json pivots = Json::array();
      for (WordId w : g.pivot_words()) pivots.push_back(word_string(w, Alphabet::F, d));
      Json radical = Json::array();
      for (const auto& x : g.radical_basis()) radical.push_back(x.to_string(d));
      j["words"] = words;
      j["gram"] = matrix;
      j["rank"] = g.rank();
      j["pivots"] = pivots;
      j["radical"] = radical;
    } else if (dims->parsed() || chr->parsed()) {
      ModuleEngine modules(eng.st, eng.prim);
      const Weight lambda = parse_weight(d, lambda_h, lambda_d);
      const ModuleMode m = parse_mode(mode);
      const bool classical = chr->parsed();
      DimTable t;
      if (classical) {
        t = modules.char_compare(lambda, depth, m);
      } else {
        t = m == ModuleMode::Verma ? modules.verma_dims(lambda, depth) : modules.hw_quotient_dims(lambda, depth);
      }
      if (classical && !t.equal()) code = 1;
      if (fmt == "csv") {
        table_csv(t, classical, out);
        return code;
      }
      j["command"] = classical ? "char" : "dims";
      j.update(table_json(t, d, classical));
      if (code != 0) j["status"] = "fail";
    } else if (primitive->parsed() || tau->parsed()) {
      const int i = require_index(d, idx);
      require_level(d, i, level);
      const PrimitiveEntry& e = eng.prim.entry(i, level);
      j["command"] = primitive->parsed() ? "primitive" : "tau";
      j["i"] = d.names()[static_cast<std::size_t>(i)];
      j["l"] = level;
      j["tau"] = e.tau.to_string();
      if (primitive->parsed()) {
        j["t"] = e.t.to_string(d);
        j["canonical_lift"] = e.canonical_lift;
        Json props = Json::array();
        for (const auto& p : eng.prim.check_properties(i, level)) {
          props.push_back({{"property", p.name}, {"ok", p.ok}, {"detail", p.detail}});
          if (!p.ok) code = 1;
        }
        j["properties"] = props;
        if (code != 0) j["status"] = "fail";
      }
    } else if (commute->parsed()) {
      const int i = require_index(d, idx);
      require_level(d, i, level);
      require_level(d, i, level_k);
      const NormalForm closed = eng.st.commutator_closed(i, level, level_k);
      const NormalForm oracle = eng.st.commutator_recursive(i, level, level_k);
      j["command"] = "commute";
      j["i"] = d.names()[static_cast<std::size_t>(i)];
      j["l"] = level;
      j["k"] = level_k;
      j["closed"] = closed.to_string(d);
      j["oracle"] = oracle.to_string(d);
      j["equal"] = closed == oracle;
      if (closed != oracle) {
        j["status"] = "fail";
        code = 1;
      }
    } else if (serre->parsed()) {
      j["command"] = "serre-check";
      Json checks = Json::array();
      for (int i : d.real_indices()) {
        for (int jj = 0; jj < d.rank(); ++jj) {
          if (jj == i) continue;
          for (int l = 1; l <= (d.is_real(jj) ? 1 : d.cutoff(jj)); ++l) {
            Json c{{"i", d.names()[static_cast<std::size_t>(i)]}, {"j", d.names()[static_cast<std::size_t>(jj)]}, {"l", l}};
            const int ht = 1 - l * d.a(i, jj) + l;
            if (ht > cfg.max_ht) {
              c["status"] = "skipped";
              c["reason"] = "height " + std::to_string(ht) + " exceeds max_ht";
              checks.push_back(c);
              continue;
            }
            const SerreResult res = eng.prim.serre_check(i, jj, l);
            c["degree"] = res.degree.k;
            c["status"] = res.ok ? "ok" : "fail";
            c["relation"] = res.relation.to_string(d);
            Json nonzero = Json::array();
            for (std::size_t k = 0; k < res.words.size(); ++k) {
              if (!res.pairings[k].is_zero()) nonzero.push_back({{"word", word_string(res.words[k], Alphabet::F, d)}, {"pairing", res.pairings[k].to_string()}});
            }
            c["nonzero_pairings"] = nonzero;
            if (!res.ok) code = 1;
            checks.push_back(c);
          }
        }
      }
      j["checks"] = checks;
      if (code != 0) j["status"] = "fail";
    } else if (limit->parsed()) {
      A1Form a1(eng.st, eng.prim);
      std::vector<LimitCheck> all = check_classical_relations(a1, max_level);
      for (auto part : {check_a1_closure(a1, closure_level, closure_length), check_hopf_limits(a1, max_level)}) {
        all.insert(all.end(), part.begin(), part.end());
      }
      j["command"] = "limit-check";
      Json checks = Json::array();
      for (const auto& c : all) {
        checks.push_back({{"relation", c.relation}, {"status", c.ok ? "ok" : "fail"}, {"witness", c.witness}});
        if (!c.ok) code = 1;
      }
      j["checks"] = checks;
      if (code != 0) j["status"] = "fail";
    }
    emit(j, fmt, out);
    return code;
  } catch (const UsageError& e) {
    return fail(ErrorCode::ValidationError, {}, e.what());
  } catch (const ValidationFailure& f) {
    return fail(f.code(), f.diagnostics(), f.what());
  } catch (const Error& e) {
    return fail(e.code(), {{e.code(), e.what()}}, e.what());
  }
}

}  // namespace qbb::cli
