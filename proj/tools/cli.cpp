#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "termclone/termclone.hpp"

namespace termclone::cli {

namespace {

struct Options {
  bool json = false;
  bool force = false;
};

class verification_failure : public std::exception {};

Guard guard_for(const Options& opts) {
  if (!opts.force) return Guard{};
  return Guard{std::numeric_limits<std::size_t>::max(), std::numeric_limits<std::size_t>::max()};
}

std::string label(carrier c) { return "e" + std::to_string(c); }

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(item);
  return out;
}

Assignment parse_assignment(const std::string& text) {
  Assignment a;
  for (const std::string& part : split_commas(text)) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw error("assignment entry without '=': '" + part + "'");
    std::string name = part.substr(0, eq);
    name.erase(std::remove_if(name.begin(), name.end(), ::isspace), name.end());
    std::string value = part.substr(eq + 1);
    value.erase(std::remove_if(value.begin(), value.end(), ::isspace), value.end());
    if (!value.empty() && value[0] == 'e') value.erase(0, 1);
    const Letter l = Letter::from_string(name);
    if (l.is_p()) throw error("p cannot be assigned");
    if (value.empty() || value.size() > 9 || !std::all_of(value.begin(), value.end(), ::isdigit))
      throw error("bad carrier index '" + part.substr(eq + 1) + "'");
    a[l.index()] = static_cast<carrier>(std::stoul(value));
  }
  return a;
}

FiniteModel read_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open model file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    throw error("model file '" + path + "' is not valid JSON: " + ex.what());
  }
  return model_from_json(j);
}

std::string render_model(const FiniteModel& m) {
  std::ostringstream os;
  os << "model size=" << m.size() << " zero=" << label(m.zero()) << " p=" << label(m.p()) << '\n';
  os << "  *  ";
  for (carrier b = 0; b < m.size(); ++b) os << ' ' << label(b);
  os << '\n';
  for (carrier a = 0; a < m.size(); ++a) {
    os << "  " << label(a) << ' ';
    for (carrier b = 0; b < m.size(); ++b) os << ' ' << label(m.op(a, b));
    os << '\n';
  }
  return os.str();
}

std::string render_witness(const CloneWitness& w) {
  return "member " + to_string(w.member) + ", substitution " + to_string(w.substitution) + ", result " +
         to_string(w.result) + " (" + w.reason + ")";
}

std::string render_witness(const LawWitness& w) {
  std::string out = "law " + w.law + " fails at (";
  for (std::size_t i = 0; i < w.tuple.size(); ++i) out += (i ? ", " : "") + label(w.tuple[i]);
  return out + ")";
}

template <class Witness>
void emit_report(const Report<Witness>& r, const Options& opts, std::ostream& out, const std::string& unit) {
  if (opts.json) {
    out << to_json(r).dump() << '\n';
  } else if (r.pass) {
    out << "pass (" << r.checked << ' ' << unit << " checked)\n";
  } else {
    out << "fail: " << render_witness(*r.counterexample) << '\n';
  }
  if (!r.pass) throw verification_failure{};
}

void emit_elements(const std::set<Element>& elements, const Options& opts, std::ostream& out) {
  if (opts.json) {
    json arr = json::array();
    for (const Element& e : elements) arr.push_back(to_json(e));
    out << arr.dump() << '\n';
  } else {
    for (const Element& e : elements) out << to_string(e) << '\n';
  }
}

// verify freeness: every model of size <= k, every n' <= n, every assignment
struct FreenessWitness {
  FiniteModel model;
  Assignment assignment;
  std::size_t vars;
  std::string detail;
};

json to_json(const FreenessWitness& w) {
  json a = json::object();
  for (const auto& [i, v] : w.assignment) a["x" + std::to_string(i)] = v;
  return {{"model", termclone::to_json(w.model)}, {"vars", w.vars}, {"assignment", a}, {"detail", w.detail}};
}

std::string render_witness(const FreenessWitness& w) {
  std::string a;
  for (const auto& [i, v] : w.assignment) a += (a.empty() ? "" : ", ") + ("x" + std::to_string(i)) + "=" + label(v);
  return w.detail + " in F_" + std::to_string(w.vars) + " under {" + a + "}\n" + render_model(w.model);
}

Report<FreenessWitness> verify_freeness(std::size_t n, std::size_t k, const Guard& guard) {
  Report<FreenessWitness> r;
  for (std::size_t size = 1; size <= k && r.pass; ++size) {
    for (const FiniteModel& m : enumerate_models(size, guard)) {
      if (auto laws = check_laws(m); !laws.pass) {
        r.fail({m, {}, 0, "enumerated model violates " + laws.counterexample->law});
        return r;
      }
      for (std::size_t vars = 0; vars <= n; ++vars) {
        for (const Assignment& a : all_assignments(vars, size)) {
          const InducedMap h = induced_map(vars, m, a, guard);
          r.checked += h.report.checked;
          if (!h.report.pass) {
            const auto& w = *h.report.counterexample;
            std::string els;
            for (const Element& e : w.elements) els += (els.empty() ? "" : ", ") + to_string(e);
            r.fail({m, a, vars,
                    w.condition + " fails at (" + els + "): expected " + label(w.expected) + ", got " + label(w.actual)});
            return r;
          }
        }
      }
    }
  }
  return r;
}

struct GenerationWitness {
  std::size_t vars;
  std::size_t generated;
  std::uint64_t expected;
};

json to_json(const GenerationWitness& w) {
  return {{"vars", w.vars}, {"generated", w.generated}, {"expected", w.expected}};
}

std::string render_witness(const GenerationWitness& w) {
  return "F_" + std::to_string(w.vars) + ": letters generate " + std::to_string(w.generated) + " of " +
         std::to_string(w.expected) + " elements";
}

struct ElementLawWitness {
  std::string law;
  std::vector<Element> tuple;
};

json to_json(const ElementLawWitness& w) {
  json t = json::array();
  for (const Element& e : w.tuple) t.push_back(termclone::to_json(e));
  return {{"law", w.law}, {"tuple", t}};
}

std::string render_witness(const ElementLawWitness& w) {
  std::string out = "law " + w.law + " fails at (";
  for (std::size_t i = 0; i < w.tuple.size(); ++i) out += (i ? ", " : "") + to_string(w.tuple[i]);
  return out + ")";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normal forms, term clones and finite models for the variety with * , p, 0"};
  app.name("termclone");
  app.require_subcommand(1, 1);
  app.fallthrough();

  Options opts;
  app.add_flag("--json", opts.json, "Emit JSON instead of plain text");
  app.add_flag("--force", opts.force, "Lift the enumeration size guards");

  std::function<void()> action;

  auto* normalize = app.add_subcommand("normalize", "Print the normal form of a term");
  std::string term_a, term_b;
  normalize->add_option("term", term_a, "Term")->required();
  normalize->callback([&] {
    action = [&] {
      const Element e = eval_term(parse_term(term_a));
      out << (opts.json ? to_json(e).dump() : to_string(e)) << '\n';
    };
  });

  auto* eq = app.add_subcommand("eq", "Decide whether two terms are equal in the variety");
  eq->add_option("left", term_a, "Term")->required();
  eq->add_option("right", term_b, "Term")->required();
  eq->callback([&] {
    action = [&] {
      const Element a = eval_term(parse_term(term_a));
      const Element b = eval_term(parse_term(term_b));
      if (opts.json)
        out << json{{"equivalent", a == b}, {"left", to_json(a)}, {"right", to_json(b)}}.dump() << '\n';
      else
        out << (a == b ? "true" : "false") << '\n';
    };
  });

  std::size_t n = 0;
  auto* enumerate = app.add_subcommand("enumerate", "List the elements of F_n");
  enumerate->add_option("n", n, "Number of generators")->required();
  enumerate->callback([&] {
    action = [&] {
      const auto all = enumerate_free(n, guard_for(opts));
      emit_elements(std::set<Element>(all.begin(), all.end()), opts, out);
    };
  });

  auto* count = app.add_subcommand("count", "Print |F_n| = 1 + (n+1)*2^(n+1)");
  count->add_option("n", n, "Number of generators")->required();
  count->callback([&] {
    action = [&] {
      const auto c = free_size(n);
      if (opts.json)
        out << json{{"n", n}, {"count", c}}.dump() << '\n';
      else
        out << c << '\n';
    };
  });

  std::string gens;
  std::size_t vars = 0;
  auto* closure = app.add_subcommand("closure", "Term clone generated inside F_m");
  closure->add_option("--gen", gens, "Comma-separated generator terms");
  closure->add_option("--vars", vars, "Ambient variable count m")->required();
  closure->callback([&] {
    action = [&] {
      std::set<Element> g;
      for (const std::string& t : split_commas(gens)) g.insert(eval_term(parse_term(t)));
      const CloneSet c = clone_closure(g, vars, guard_for(opts));
      if (opts.json)
        out << to_json(c).dump() << '\n';
      else
        emit_elements(c.members, opts, out);
    };
  });

  auto* substitute_cmd = app.add_subcommand("substitute", "Apply a substitution to a term's normal form");
  std::string subst_text;
  substitute_cmd->add_option("term", term_a, "Term")->required();
  substitute_cmd->add_option("--subst", subst_text, "Bindings such as \"x1=p*x2; x2=0\"")->required();
  substitute_cmd->callback([&] {
    action = [&] {
      const Element e = substitute(eval_term(parse_term(term_a)), parse_substitution(subst_text));
      out << (opts.json ? to_json(e).dump() : to_string(e)) << '\n';
    };
  });

  auto* family = app.add_subcommand("family", "The S(A) clone family");
  family->require_subcommand(1, 1);
  std::string lengths, lengths2;
  bool with_generators = false;

  auto* family_list = family->add_subcommand("list", "Members of S(A) inside F_m");
  family_list->add_option("--lengths", lengths, "Comma-separated word lengths (>= 2)")->required();
  family_list->add_option("--vars", vars, "Ambient variable count m")->required();
  family_list->add_flag("--with-generators", with_generators, "Adjoin x1..xm");
  family_list->callback([&] {
    action = [&] {
      const LengthSet a = parse_length_set(lengths);
      const CloneSet s = with_generators ? t_of(a, vars, guard_for(opts)) : s_of(a, vars, guard_for(opts));
      if (opts.json)
        out << to_json(s).dump() << '\n';
      else
        emit_elements(s.members, opts, out);
    };
  });

  auto* family_verify = family->add_subcommand("verify", "Check closure and length invariance of S(A)");
  family_verify->add_option("--lengths", lengths, "Comma-separated word lengths (>= 2)")->required();
  family_verify->add_option("--vars", vars, "Ambient variable count m")->required();
  family_verify->callback([&] {
    action = [&] {
      emit_report(verify_family_closed(parse_length_set(lengths), vars, guard_for(opts)), opts, out, "substitutions");
    };
  });

  auto* family_distinguish = family->add_subcommand("distinguish", "Find a word in exactly one of S(A), S(B)");
  family_distinguish->add_option("--lengths", lengths, "Lengths of A")->required();
  family_distinguish->add_option("--lengths2", lengths2, "Lengths of B")->required();
  family_distinguish->add_option("--vars", vars, "Ambient variable count m")->required();
  family_distinguish->callback([&] {
    action = [&] {
      const LengthSet a = parse_length_set(lengths);
      const LengthSet b = parse_length_set(lengths2);
      const auto w = distinguish(a, b, vars);
      const std::string side = w ? (a.contains(length(*w)) ? "A" : "B") : "";
      if (opts.json)
        out << json{{"equal", !w}, {"witness", w ? to_json(*w) : json(nullptr)}, {"in", w ? json(side) : json(nullptr)}}
                   .dump()
            << '\n';
      else if (w)
        out << to_string(*w) << " (in S(" << side << ") only)\n";
      else
        out << "equal\n";
    };
  });

  auto* verify = app.add_subcommand("verify", "Brute-force structural checks");
  verify->require_subcommand(1, 1);
  std::optional<std::size_t> verify_vars;
  std::size_t model_size = 3;

  auto* verify_laws = verify->add_subcommand("laws", "The defining laws over every triple of F_n");
  verify_laws->add_option("--vars", verify_vars, "n (default 3)");
  verify_laws->callback([&] {
    action = [&] {
      const FreeModel f = free_model(verify_vars.value_or(3), guard_for(opts));
      const LawReport laws = check_laws(f.model);
      Report<ElementLawWitness> r;
      r.checked = laws.checked;
      if (!laws.pass) {
        std::vector<Element> tuple;
        for (carrier c : laws.counterexample->tuple) tuple.push_back(f.labels[c]);
        r.fail({laws.counterexample->law, tuple});
      }
      emit_report(r, opts, out, "instances");
    };
  });

  auto* verify_freeness_cmd = verify->add_subcommand("freeness", "Induced maps from F_n into every small model");
  verify_freeness_cmd->add_option("--vars", verify_vars, "n (default 2)");
  verify_freeness_cmd->add_option("--model-size", model_size, "Largest model size k (default 3)");
  verify_freeness_cmd->callback([&] {
    action = [&] {
      emit_report(verify_freeness(verify_vars.value_or(2), model_size, guard_for(opts)), opts, out,
                  "homomorphism conditions");
    };
  });

  auto* verify_generation = verify->add_subcommand("generation", "F_0..F_n are generated by their letters");
  verify_generation->add_option("--vars", verify_vars, "n (default 4)");
  verify_generation->callback([&] {
    action = [&] {
      Report<GenerationWitness> r;
      const Guard guard = guard_for(opts);
      for (std::size_t k = 0; k <= verify_vars.value_or(4) && r.pass; ++k) {
        ++r.checked;
        if (!check_generation(k, guard)) r.fail({k, generated_by_letters(k, guard).size(), free_size(k)});
      }
      emit_report(r, opts, out, "free algebras");
    };
  });

  auto* models = app.add_subcommand("models", "Finite models of the variety");
  models->require_subcommand(1, 1);
  std::size_t k = 0;
  bool iso = false;
  std::string path;
  std::string assign_text;

  auto* models_enumerate = models->add_subcommand("enumerate", "All models on {e0..e(k-1)}");
  models_enumerate->add_option("k", k, "Carrier size")->required();
  models_enumerate->add_flag("--iso", iso, "Keep one model per isomorphism class");
  models_enumerate->callback([&] {
    action = [&] {
      auto all = enumerate_models(k, guard_for(opts));
      if (iso) all = dedup_isomorphic(all);
      if (opts.json) {
        json arr = json::array();
        for (const FiniteModel& m : all) arr.push_back(to_json(m));
        out << arr.dump() << '\n';
      } else {
        out << all.size() << " models\n";
        for (const FiniteModel& m : all) out << render_model(m);
      }
    };
  });

  auto* models_check = models->add_subcommand("check", "Check a model file against the laws");
  models_check->add_option("file", path, "Model JSON file")->required();
  models_check->callback([&] { action = [&] { emit_report(check_laws(read_model(path)), opts, out, "instances"); }; });

  auto* models_eval = models->add_subcommand("eval", "Evaluate a term in a model file");
  models_eval->add_option("file", path, "Model JSON file")->required();
  models_eval->add_option("term", term_a, "Term")->required();
  models_eval->add_option("--assign", assign_text, "Assignment such as \"x1=e0,x2=e1\"");
  models_eval->callback([&] {
    action = [&] {
      const carrier c = eval_in_model(parse_term(term_a), read_model(path), parse_assignment(assign_text));
      if (opts.json)
        out << json{{"value", c}}.dump() << '\n';
      else
        out << label(c) << '\n';
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& ex) {
    err << "termclone: " << ex.what() << '\n';
    return usage_error;
  }

  if (opts.force) err << "warning: --force lifts the enumeration size guards\n";
  try {
    if (action) action();
    return ok;
  } catch (const verification_failure&) {
    return verification_failed;
  } catch (const std::exception& ex) {
    err << "termclone: " << ex.what() << '\n';
    return usage_error;
  }
}

}  // namespace termclone::cli
