#pragma once

// Command-line front end. Every subcommand is a thin wrapper over a library
// call; exit status is 0 on success, 1 when a verification fails and 2 on
// bad input.

#include "dehn/io.hpp"

#include "CLI11.hpp"

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace dehn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;

struct Options {
  bool json = false;
  std::string input;
};

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string join_words(const std::vector<std::string>& words) {
  std::string s;
  for (const auto& w : words) s += w + " ";
  return s;
}

inline void emit(std::ostream& out, const Options& opt, const io::Json& j, const std::string& text) {
  if (opt.json) {
    out << j.dump(2) << '\n';
  } else {
    out << text;
  }
}

inline int cmd_cfrac(const Options& opt, const std::vector<std::string>& words, std::ostream& out) {
  ConwayWord w = ConwayWord::parse(join_words(words));
  Slope s = continued_fraction_eval(w);
  emit(out, opt, {{"word", w.str()}, {"fraction", s.str()}}, s.str() + "\n");
  return kExitOk;
}

inline int cmd_twobridge(const Options& opt, const std::vector<std::string>& words,
                         const std::optional<std::string>& family, std::ostream& out) {
  io::Json j;
  std::ostringstream text;
  std::optional<ConwayWord> word;
  if (family) {
    Integer n = parse_integer(*family);
    require_family_index(n);
    word = family_word(n);
    j["n"] = io::to_json(n);
    j["p(n)"] = io::to_json(family_p(n));
    j["q(n)"] = io::to_json(family_q(n));
    text << "n: " << n << "\np(n): " << family_p(n) << "\nq(n): " << family_q(n) << '\n';
  } else {
    if (words.empty()) throw InputError("twobridge needs a Conway word or --family N");
    word = ConwayWord::parse(join_words(words));
  }
  Slope s = continued_fraction_eval(*word);
  SchubertForm f = SchubertForm::from_fraction(s);
  if (family && f != family_schubert(parse_integer(*family))) {
    out << "continued fraction disagrees with the family polynomials\n";
    return kExitVerificationFailed;
  }
  j["word"] = word->str();
  j["fraction"] = s.str();
  j["schubert"] = f.str();
  j["components"] = component_count(f);
  j["mirror_word"] = conway_mirror(*word).str();
  j["mirror"] = mirror(f).str();
  j["achiral"] = is_achiral_lens(f);
  text << "word: " << word->str() << "\nfraction: " << s << "\nschubert: " << f
       << "\ntype: " << (f.is_knot() ? "knot" : "link") << " (" << component_count(f)
       << " component" << (f.is_knot() ? "" : "s") << ")\nmirror word: " << conway_mirror(*word)
       << "\nmirror: " << mirror(f) << "\nachiral: " << yes_no(is_achiral_lens(f)) << '\n';
  emit(out, opt, j, text.str());
  return kExitOk;
}

inline int cmd_lens(const Options& opt, const std::string& p, const std::string& q,
                    const std::vector<std::string>& compare, std::ostream& out) {
  auto make = [](const std::string& ps, const std::string& qs) {
    try {
      return SchubertForm::make(parse_integer(ps), parse_integer(qs));
    } catch (const DomainError& e) {
      throw InputError(e.what());
    }
  };
  SchubertForm a = make(p, q);
  io::Json j{{"schubert", a.str()},
             {"components", component_count(a)},
             {"mirror", mirror(a).str()},
             {"achiral", is_achiral_lens(a)}};
  std::ostringstream text;
  text << a << "\ntype: " << (a.is_knot() ? "knot" : "link") << "\nmirror: " << mirror(a)
       << "\nachiral: " << yes_no(is_achiral_lens(a)) << '\n';
  if (!compare.empty()) {
    if (compare.size() != 2) throw InputError("--compare takes two values P Q");
    SchubertForm b = make(compare[0], compare[1]);
    bool eq = schubert_equivalent(a, b);
    bool mirror_eq = schubert_equivalent(mirror(a), b);
    j["compare"] = b.str();
    j["equivalent"] = eq;
    j["mirror_equivalent"] = mirror_eq;
    text << "compare: " << b << "\nequivalent: " << yes_no(eq)
         << "\nmirror-equivalent: " << yes_no(mirror_eq) << '\n';
  }
  emit(out, opt, j, text.str());
  return kExitOk;
}

inline int cmd_snf(const Options& opt, bool transforms, bool oracle, std::ostream& out) {
  if (opt.input.empty()) throw InputError("snf needs --input FILE (or - for stdin)");
  IntegerMatrix m = io::matrix_from_json(io::read_document(opt.input));
  SNFResult r = smith_normal_form(m);
  AbelianGroup g = cokernel(m);
  io::Json diag = io::Json::array();
  std::string diag_text;
  for (const auto& d : r.diagonal()) {
    diag.push_back(io::to_json(d));
    diag_text += (diag_text.empty() ? "" : " ") + d.str();
  }
  io::Json j{{"rows", m.rows()}, {"cols", m.cols()}, {"diagonal", diag}, {"cokernel", io::to_json(g)}};
  std::ostringstream text;
  text << "diagonal: " << diag_text << "\ncokernel: " << g << '\n';
  if (transforms) {
    j["U"] = io::to_json(r.U);
    j["D"] = io::to_json(r.D);
    j["V"] = io::to_json(r.V);
    text << "U =\n" << r.U << "D =\n" << r.D << "V =\n" << r.V;
  }
  int status = kExitOk;
  if (oracle) {
    AbelianGroup o;
    try {
      o = minors_gcd_oracle(m);
    } catch (const DomainError& e) {
      throw InputError(e.what());
    }
    j["oracle"] = io::to_json(o);
    j["oracle_agrees"] = o == g;
    text << "oracle: " << o << (o == g ? " (agrees)" : " (DISAGREES)") << '\n';
    if (o != g) status = kExitVerificationFailed;
  }
  emit(out, opt, j, text.str());
  return status;
}

inline std::pair<std::string, std::string> split_assignment(const std::string& s) {
  auto eq = s.find('=');
  if (eq == std::string::npos) throw InputError("expected COMPONENT=p/q, got '" + s + "'");
  return {s.substr(0, eq), s.substr(eq + 1)};
}

inline int cmd_surgery(const Options& opt, const std::string& templ, const std::optional<std::string>& n,
                       const std::vector<std::string>& fills, const std::vector<std::string>& drills,
                       bool show_matrix, std::ostream& out) {
  std::optional<SurgeryDescription> desc;
  if (!templ.empty()) {
    if (!opt.input.empty()) throw InputError("use either --template or --input, not both");
    if (templ == "mn") {
      if (!n) throw InputError("template 'mn' needs --n");
      Integer value = parse_integer(*n);
      try {
        desc = mn_framed_link(value);
      } catch (const DomainError& e) {
        throw InputError(e.what());
      }
    } else if (templ == "unknot") {
      desc = SurgeryDescription{FramedLink(IntegerMatrix(1, 1), {"k"}), {}};
    } else {
      throw InputError("unknown template '" + templ + "' (known: mn, unknot)");
    }
  } else {
    if (opt.input.empty()) throw InputError("surgery needs --template NAME or --input FILE");
    desc = io::surgery_from_json(io::read_document(opt.input));
  }
  try {
    for (const auto& d : drills) desc->fill.erase(desc->link.index_of(d));
    for (const auto& f : fills) {
      auto [name, slope] = split_assignment(f);
      desc->fill.insert_or_assign(desc->link.index_of(name), Slope::parse(slope));
    }
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
  IntegerMatrix m = build_presentation(desc->link, desc->fill);
  AbelianGroup g = cokernel(m);
  io::Json j = io::to_json(*desc);
  j["presentation"] = io::to_json(m);
  j["homology"] = io::to_json(g);
  std::ostringstream text;
  if (show_matrix) text << "presentation (" << m.rows() << "x" << m.cols() << "):\n" << m;
  text << g << '\n';
  emit(out, opt, j, text.str());
  return kExitOk;
}

inline int report_family(const Options& opt, const FamilySweep& sweep, std::ostream& out);

inline int cmd_family(const Options& opt, const std::string& lo, const std::string& hi, std::ostream& out) {
  Integer n_min = parse_integer(lo);
  Integer n_max = parse_integer(hi);
  return report_family(opt, certify_family_range(n_min, n_max), out);
}

/// Prints a sweep; exit status 1 names the first failing check.
inline int report_family(const Options& opt, const FamilySweep& sweep, std::ostream& out) {
  std::string text = io::family_table(sweep);
  if (auto f = sweep.first_failure()) text += "FAILED: " + f->name + (f->detail.empty() ? "" : " (" + f->detail + ")") + "\n";
  emit(out, opt, io::to_json(sweep), text);
  return sweep.all_passed() ? kExitOk : kExitVerificationFailed;
}

inline int cmd_slope_normalize(const Options& opt, const std::string& p, const std::string& q, std::ostream& out) {
  Integer pi = parse_integer(p), qi = parse_integer(q);
  if (pi == 0 && qi == 0) throw InputError("slope 0/0 is not a slope");
  Slope s = Slope::normalize(pi, qi);
  emit(out, opt, {{"slope", s.str()}}, s.str() + "\n");
  return kExitOk;
}

inline int cmd_slope_distance(const Options& opt, const std::string& a, const std::string& b, std::ostream& out) {
  Integer d = slope_distance(Slope::parse(a), Slope::parse(b));
  emit(out, opt, {{"a", Slope::parse(a).str()}, {"b", Slope::parse(b).str()}, {"distance", io::to_json(d)}},
       d.str() + "\n");
  return kExitOk;
}

inline int cmd_slope_apply(const Options& opt, const std::string& matrix, const std::string& s, std::ostream& out) {
  SlopeInvolution inv = SlopeInvolution::parse(matrix);
  Slope image = apply_involution(inv, Slope::parse(s));
  emit(out, opt, {{"action", inv.str()}, {"slope", Slope::parse(s).str()}, {"image", image.str()}},
       image.str() + "\n");
  return kExitOk;
}

inline int cmd_slope_fixed(const Options& opt, const std::string& matrix, const std::string& bound, std::ostream& out) {
  SlopeInvolution inv = SlopeInvolution::parse(matrix);
  Integer b = parse_integer(bound);
  if (b < 1) throw InputError("--bound must be >= 1");
  io::Json list = io::Json::array();
  std::string text;
  for (const auto& s : fixed_slopes(inv, b)) {
    list.push_back(s.str());
    text += s.str() + "\n";
  }
  emit(out, opt, {{"action", inv.str()}, {"bound", io::to_json(b)}, {"involution", inv.is_involution()}, {"fixed", list}},
       text);
  return kExitOk;
}

/// Parses argv and dispatches. Writes results to `out` and diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact two-bridge, lens-space and surgery-homology calculator", "dehn"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Emit machine-readable JSON");
  app.add_option("--input", opt.input, "Input document path (- for stdin)");

  std::vector<std::string> words;
  auto* cfrac = app.add_subcommand("cfrac", "Evaluate the continued fraction of a Conway word");
  cfrac->add_option("word", words, "Integers a1 ... ak")->required();

  std::vector<std::string> tb_words;
  std::optional<std::string> tb_family;
  auto* twobridge = app.add_subcommand("twobridge", "Two-bridge link of a Conway word or family member");
  twobridge->add_option("word", tb_words, "Integers a1 ... ak");
  twobridge->add_option("--family", tb_family, "Use C(n,n,-1,n,n)");

  std::string lp, lq;
  std::vector<std::string> compare;
  auto* lens = app.add_subcommand("lens", "Classify the lens space / two-bridge link S(p,q)");
  lens->add_option("p", lp)->required();
  lens->add_option("q", lq)->required();
  lens->add_option("--compare", compare, "Second form P Q")->expected(2);

  bool transforms = false, oracle = false;
  auto* snf = app.add_subcommand("snf", "Smith normal form of a matrix document");
  snf->add_flag("--transforms", transforms, "Also print U and V");
  snf->add_flag("--oracle", oracle, "Cross-check with the gcd-of-minors oracle");

  std::string templ;
  std::optional<std::string> tn;
  std::vector<std::string> fills, drills;
  bool show_matrix = false;
  auto* surgery = app.add_subcommand("surgery", "First homology of a surgery description");
  surgery->add_option("--template", templ, "Built-in description: mn, unknot");
  surgery->add_option("--n", tn, "Family index for --template mn");
  surgery->add_option("--fill", fills, "COMPONENT=p/q, repeatable");
  surgery->add_option("--drill", drills, "Leave COMPONENT unfilled, repeatable");
  surgery->add_flag("--matrix", show_matrix, "Print the presentation matrix");

  std::string f_min = "-10", f_max = "10";
  auto* family = app.add_subcommand("family", "Certify the M_n family over a range of n");
  family->add_option("--min", f_min, "Smallest n (default -10)");
  family->add_option("--max", f_max, "Largest n (default 10)");

  auto* slope = app.add_subcommand("slope", "Slope arithmetic");
  slope->require_subcommand(1);
  std::string sp, sq, sa, sb, smatrix = "0,1,1,0", sbound = "100";
  auto* normalize = slope->add_subcommand("normalize", "Canonical form of p/q");
  normalize->add_option("p", sp)->required();
  normalize->add_option("q", sq)->required();
  auto* distance = slope->add_subcommand("distance", "Intersection number of two slopes");
  distance->add_option("a", sa)->required();
  distance->add_option("b", sb)->required();
  auto* apply = slope->add_subcommand("apply", "Image of a slope under a unimodular action");
  apply->add_option("--matrix", smatrix, "a,b,c,d (default swap 0,1,1,0)");
  apply->add_option("slope", sa)->required();
  auto* fixed = slope->add_subcommand("fixed", "Slopes fixed by a unimodular action");
  fixed->add_option("--matrix", smatrix, "a,b,c,d (default swap 0,1,1,0)");
  fixed->add_option("--bound", sbound, "Enumerate |p|,|q| <= bound (default 100)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (cfrac->parsed()) return cmd_cfrac(opt, words, out);
    if (twobridge->parsed()) return cmd_twobridge(opt, tb_words, tb_family, out);
    if (lens->parsed()) return cmd_lens(opt, lp, lq, compare, out);
    if (snf->parsed()) return cmd_snf(opt, transforms, oracle, out);
    if (surgery->parsed()) return cmd_surgery(opt, templ, tn, fills, drills, show_matrix, out);
    if (family->parsed()) return cmd_family(opt, f_min, f_max, out);
    if (normalize->parsed()) return cmd_slope_normalize(opt, sp, sq, out);
    if (distance->parsed()) return cmd_slope_distance(opt, sa, sb, out);
    if (apply->parsed()) return cmd_slope_apply(opt, smatrix, sa, out);
    if (fixed->parsed()) return cmd_slope_fixed(opt, smatrix, sbound, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace dehn::cli
