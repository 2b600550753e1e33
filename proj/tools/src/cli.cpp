#include "invseq/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <ostream>
#include <sstream>

#include "invseq/bijections.hpp"
#include "invseq/closed_forms.hpp"
#include "invseq/enumerate.hpp"
#include "invseq/io.hpp"
#include "invseq/recurrences.hpp"
#include "invseq/series.hpp"
#include "invseq/tables.hpp"

namespace invseq::cli {

namespace {

struct Options {
  int n = 8;
  int nmax = 8;
  int order = 24;
  unsigned threads = 0;
  std::string patterns;
  std::vector<std::string> triples;
  std::string format = "bfile";
  std::string stat;
  std::string name;
  std::string input;
  std::string eq;
  std::string u = "1";
  std::string v = "1";
  int table = 1;
  std::string data;
};

PatternSet pattern_set(const Options& o) {
  auto ps = PatternSet::parse(o.patterns, o.triples);
  if (ps.empty()) throw CLI::ValidationError("--patterns", "give --patterns and/or --triple");
  return ps;
}

std::vector<std::string> split_patterns(const PatternSet& ps) {
  std::vector<std::string> v;
  for (const auto& p : ps.word_patterns) v.push_back(p.to_string());
  for (const auto& t : ps.triples) v.push_back(t.to_string());
  return v;
}

int cmd_count(const Options& o, std::ostream& out) {
  out << count_avoiders(o.n, pattern_set(o), o.threads) << '\n';
  return 0;
}

int cmd_sequence(const Options& o, std::ostream& out) {
  auto ps = pattern_set(o);
  auto seq = avoidance_sequence(ps, o.nmax, o.threads);
  if (o.format == "bfile")
    out << write_bfile(seq);
  else if (o.format == "csv")
    out << write_sequence_csv(seq);
  else
    out << write_sequence_json(split_patterns(ps), seq, "bruteforce");
  return 0;
}

int cmd_distribution(const Options& o, std::ostream& out) {
  for (const auto& [value, count] : distribution(o.n, pattern_set(o), o.stat)) out << value << ' ' << count << '\n';
  return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
  auto w = wilf_classify(o.nmax, o.threads);
  for (const auto& c : w.classes) {
    out << class_label(c.members.front()) << " a_" << o.nmax << '=' << c.counts.back() << " :";
    for (const auto& p : c.members) out << ' ' << p.to_string();
    out << '\n';
  }
  out << w.classes.size() << " classes over " << w.pair_count() << " pairs\n";
  auto labels = check_labels(w);
  if (!labels.empty()) out << "label disagreement: " << labels << '\n';
  return labels.empty() ? 0 : 1;
}

// Prints before/after values of the statistics a map is stated to preserve.
int stat_report(const InvSeq& e, const InvSeq& f, std::initializer_list<Statistic> kept, std::ostream& out) {
  int rc = 0;
  for (Statistic s : kept) {
    int a = statistic_value(e, s), b = statistic_value(f, s);
    out << to_string(s) << ' ' << a << " -> " << b << (a == b ? " ok" : " CHANGED") << '\n';
    if (a != b) rc = 1;
  }
  return rc;
}

int cmd_bijection(const Options& o, std::ostream& out) {
  using S = Statistic;
  const std::string& name = o.name;
  if (name == "tree_to_dyck") {
    auto t = OrderedTree::parse(o.input);
    auto d = tree_to_dyck(t);
    out << "image " << format_word(d.heights()) << '\n';
    out << "type " << format_word(t.type()) << " -> " << format_word(d.type()) << (t.type() == d.type() ? " ok" : " CHANGED") << '\n';
    out << "capacity " << t.capacity() << " -> " << d.capacity() << (t.capacity() == d.capacity() ? " ok" : " CHANGED") << '\n';
    return t.type() == d.type() && t.capacity() == d.capacity() ? 0 : 1;
  }
  if (name == "eta_inverse") {
    throw CLI::ValidationError("--name", "eta_inverse takes a set partition; use the library API");
  }
  if (name == "cyclic_exchange") {
    throw CLI::ValidationError("--name", "cyclic_exchange needs a subsequence; use the library API");
  }
  const InvSeq e(parse_int_list(o.input));
  if (name == "eta") {
    auto p = eta(e);
    out << "image " << p.to_string() << '\n';
    int z = stats(e).zero;
    out << "zero " << z << " -> blocks " << p.block_count() << (static_cast<std::size_t>(z) == p.block_count() ? " ok" : " CHANGED") << '\n';
    return static_cast<std::size_t>(z) == p.block_count() ? 0 : 1;
  }
  if (name == "outline") {
    auto d = outline(e);
    out << "image " << d.to_string() << '\n';
    out << "class_a " << (d.in_class_a() ? "yes" : "no") << '\n';
    return d.in_class_a() ? 0 : 1;
  }
  struct Map {
    const char* name;
    std::function<InvSeq(const InvSeq&)> f;
    std::vector<Statistic> kept;
  };
  const std::vector<Map> maps{
      {"phi_stat", phi_stat, {S::dist, S::satu, S::zero}},
      {"phi_stat_inverse", phi_stat_inverse, {S::dist, S::satu, S::zero}},
      {"zero_propagate", zero_propagate, {}},
      {"zero_propagate_inverse", zero_propagate_inverse, {}},
      {"first_occurrence", first_occurrence_map, {}},
      {"first_occurrence_inverse", first_occurrence_inverse, {}},
      {"rho", rho, {}},
      {"rho_inverse", rho_inverse, {}},
      {"corteel_phi", corteel_phi, {S::zero, S::dist}},
      {"psi", psi, {S::zero, S::dist, S::satu}},
      {"cap_map", cap_map, {}},
      {"cap_map_inverse", cap_map_inverse, {}},
  };
  for (const auto& m : maps) {
    if (name != m.name) continue;
    auto f = m.f(e);
    out << "image " << format_word(f.span()) << '\n';
    int rc = 0;
    for (Statistic s : m.kept) rc = std::max(rc, stat_report(e, f, {s}, out));
    return rc;
  }
  throw CLI::ValidationError("--name", "unknown bijection: " + name);
}

int cmd_triangle(const Options& o, std::ostream& out) {
  const std::string& n = o.name;
  if (n == "a") out << write_triangle_csv(a_triangle(o.nmax));
  else if (n == "b") out << write_triangle_csv(b_triangle(o.nmax));
  else if (n == "c") out << write_triangle_csv(c_triangle(o.nmax));
  else if (n == "z") out << write_triangle_csv(z_triangle(o.nmax));
  else if (n == "T") out << write_triangle_csv(triangle_T(o.nmax));
  else if (n == "d") out << write_triangle_csv(dyck_last(o.nmax));
  else if (n == "stirling") out << write_triangle_csv(stirling2_triangle(o.nmax));
  else throw CLI::ValidationError("--name", "triangle is one of a, b, c, z, T, d, stirling");
  return 0;
}

int cmd_gf(const Options& o, std::ostream& out) {
  std::vector<BigRational> params{parse_rational(o.u)};
  out << write_series(gf(parse_gf_name(o.name), o.order, params));
  return 0;
}

int cmd_residual(const Options& o, std::ostream& out) {
  auto r = residual(parse_equation_id(o.eq), parse_rational(o.u), parse_rational(o.v), o.order);
  out << write_series(r);
  out << (r.is_zero() ? "zero" : "NONZERO") << '\n';
  return r.is_zero() ? 0 : 1;
}

int cmd_report(const Options& o, std::ostream& out) {
  if (o.table != 1 && o.table != 2) throw CLI::ValidationError("--table", "1 or 2");
  auto data = o.data.empty() ? ExpectedData::embedded() : ExpectedData::load(o.data);
  auto rep = table_report(static_cast<TableId>(o.table), o.nmax, data, o.threads);
  out << format_report(rep);
  return rep.all_match() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inversion sequences avoiding pairs of length-3 patterns", "invseq"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads, "worker threads for enumeration (0 = all cores)");

  auto add_patterns = [&](CLI::App* c) {
    c->add_option("--patterns,-p", o.patterns, "comma-separated canonical patterns, e.g. 001,110");
    c->add_option("--triple,-t", o.triples, "relation triple such as \"≥,≠,≥\"; repeatable");
  };

  auto* count = app.add_subcommand("count", "count avoiders of length n");
  count->add_option("--n", o.n)->required()->check(CLI::Range(0, kMaxEnumerationLength));
  add_patterns(count);

  auto* sequence = app.add_subcommand("sequence", "avoidance sequence a_1..a_nmax");
  add_patterns(sequence);
  sequence->add_option("--nmax", o.nmax)->required()->check(CLI::Range(1, kMaxEnumerationLength));
  sequence->add_option("--format", o.format)->check(CLI::IsMember({"bfile", "csv", "json"}));

  auto* dist = app.add_subcommand("distribution", "histogram of a statistic over a class");
  dist->add_option("--n", o.n)->required()->check(CLI::Range(0, kMaxEnumerationLength));
  add_patterns(dist);
  dist->add_option("--stat", o.stat)->required();

  auto* classify = app.add_subcommand("classify", "Wilf classes of the 78 pairs");
  classify->add_option("--nmax", o.nmax)->check(CLI::Range(1, kMaxEnumerationLength));

  auto* bij = app.add_subcommand("bijection", "apply a bijection to one object");
  bij->add_option("--name", o.name)->required();
  bij->add_option("--input", o.input, "comma-separated entries, or a tree literal for tree_to_dyck")->required();

  auto* tri = app.add_subcommand("triangle", "dump a counting triangle as CSV");
  tri->add_option("--name", o.name)->required();
  tri->add_option("--nmax", o.nmax)->check(CLI::Range(1, 40));

  auto* gfc = app.add_subcommand("gf", "series coefficients of a generating function");
  gfc->add_option("--name", o.name)->required();
  gfc->add_option("--order", o.order)->check(CLI::Range(1, 200));
  gfc->add_option("--u", o.u, "parameter for d_at");

  auto* res = app.add_subcommand("residual", "functional equation residual at a rational point");
  res->add_option("--eq", o.eq)->required();
  res->add_option("--u", o.u)->required();
  res->add_option("--v", o.v)->required();
  res->add_option("--order", o.order)->check(CLI::Range(1, 40));

  auto* rep = app.add_subcommand("report", "compare a table against the expected data");
  rep->add_option("--table", o.table)->required();
  rep->add_option("--nmax", o.nmax)->check(CLI::Range(1, kMaxEnumerationLength));
  rep->add_option("--data", o.data, "expected-values CSV overriding the embedded copy");

  std::vector<std::string> argv_store{"invseq"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (count->parsed()) return cmd_count(o, out);
    if (sequence->parsed()) return cmd_sequence(o, out);
    if (dist->parsed()) return cmd_distribution(o, out);
    if (classify->parsed()) return cmd_classify(o, out);
    if (bij->parsed()) return cmd_bijection(o, out);
    if (tri->parsed()) return cmd_triangle(o, out);
    if (gfc->parsed()) return cmd_gf(o, out);
    if (res->parsed()) return cmd_residual(o, out);
    if (rep->parsed()) return cmd_report(o, out);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << to_string(e.code()) << ": " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace invseq::cli
