#include "qv/cli.hpp"

#include <sstream>

#include "CLI11.hpp"
#include "qv/fock.hpp"
#include "qv/json_io.hpp"
#include "qv/parts.hpp"
#include "qv/theta.hpp"
#include "qv/verify.hpp"

namespace qv::cli {

namespace {

std::set<int> parse_subset(const std::string& csv, const Diagram& d) {
  std::set<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int v = std::stoi(tok);
    if (!d.has_vertex(v))
      throw CLI::ValidationError("--iplus", "vertex " + tok + " is not in " + d.name());
    out.insert(v);
  }
  if (out.empty()) throw CLI::ValidationError("--iplus", "subset must be nonempty");
  return out;
}

std::string describe_diagram(const Diagram& d) {
  std::ostringstream os;
  os << d.name() << ": " << d.num_vertices() << " vertices";
  os << " {";
  for (size_t i = 0; i < d.vertices.size(); ++i) os << (i ? "," : "") << d.vertices[i];
  os << "}\nedges:";
  for (const auto& [e, m] : d.edges) {
    os << " " << e.first << "-" << e.second;
    if (m > 1) os << "(x" << m << ")";
  }
  os << "\n";
  if (d.affine) {
    os << "marks:";
    for (auto [v, a] : marks(d)) os << " a_" << v << "=" << a;
    os << "\n";
  } else {
    os << "dual Coxeter number: " << dual_coxeter(d) << "\n";
  }
  return os.str();
}

std::string describe_substitution(const Substitution& sub) {
  std::ostringstream os;
  const Diagram& d = sub.diagram();
  os << d.name() << " with I0 = {";
  for (size_t i = 0; i < sub.I0().size(); ++i) os << (i ? "," : "") << sub.I0()[i];
  os << "}, I+ = {";
  for (size_t i = 0; i < sub.Iplus().size(); ++i) os << (i ? "," : "") << sub.Iplus()[i];
  os << "}\n";
  for (int i : d.vertices) {
    RootOfUnity r = sub.alpha_image(i);
    os << "  e^{a_" << i << "} -> ";
    if (!sub.in_I0(i)) os << "e^{a_" << i << "} * ";
    os << "exp(2*pi*i * " << rat_str(r.exponent()) << ")\n";
  }
  for (int j : sub.I0())
    os << "  e^{L_" << j << "} -> exp(2*pi*i * "
       << rat_str(sub.lambda_fin_image(j).exponent()) << ")\n";
  os << "  c_{L_0} = exp(2*pi*i * " << rat_str(sub.c_lambda0().exponent()) << ")\n";
  return os.str();
}

std::string emit_series(const MultiSeries& s, const std::string& format) {
  if (format == "json") return series_to_json(s).dump(2) + "\n";
  if (format == "pretty") return pretty_series(s);
  throw CLI::ValidationError("--format", "series support json|pretty");
}

std::string emit_qseries(const QSeries& s, const std::string& format) {
  if (format == "json") return qseries_to_json(s).dump(2) + "\n";
  if (format == "csv") return qseries_to_csv(s);
  if (format == "pretty") return pretty_qseries(s);
  throw CLI::ValidationError("--format", "q-series support json|csv|pretty");
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  CLI::App app{"exact generating series for affine ADE quiver-variety Euler characteristics"};
  app.require_subcommand(1);
  std::ostringstream out;

  std::string type_spec = "A2~", iplus_csv, format = "json", partition_csv, suite = "all";
  int truncation = 6, n = 2, bound = 8, samples = 300, max_boxes = 20;
  int ra = 0, rb = 0, rc = 0;
  unsigned long seed = 1;

  // describe
  CLI::App* describe = app.add_subcommand("describe", "print the vertex numbering of a diagram");
  describe->add_option("--type", type_spec, "diagram spec, e.g. A2~ or D4")->required();

  // subst describe
  CLI::App* subst = app.add_subcommand("subst", "substitution data");
  CLI::App* subst_describe = subst->add_subcommand("describe", "print each variable's image");
  subst_describe->add_option("--type", type_spec)->required();
  std::string iplus_sub;
  subst_describe->add_option("--iplus", iplus_sub, "comma list of I+ vertices")->required();

  // series full|quot (type A enumeration)
  CLI::App* series = app.add_subcommand("series", "partition-enumeration series (type A)");
  CLI::App* series_full = series->add_subcommand("full", "all colored partitions");
  series_full->add_option("--type", type_spec)->required();
  series_full->add_option("--truncate", truncation);
  series_full->add_option("--format", format);
  CLI::App* series_quot = series->add_subcommand("quot", "I+-generated partitions");
  series_quot->add_option("--type", type_spec)->required();
  series_quot->add_option("--iplus", iplus_csv)->required();
  series_quot->add_option("--truncate", truncation);
  series_quot->add_option("--format", format);

  // theta full|quot
  CLI::App* theta_cmd = app.add_subcommand("theta", "lattice-sum series");
  CLI::App* theta_full_cmd = theta_cmd->add_subcommand("full", "smooth-model series over I");
  theta_full_cmd->add_option("--type", type_spec)->required();
  theta_full_cmd->add_option("--truncate", truncation);
  theta_full_cmd->add_option("--format", format);
  CLI::App* theta_quot_cmd = theta_cmd->add_subcommand("quot", "series over I+ at the wall");
  theta_quot_cmd->add_option("--type", type_spec)->required();
  theta_quot_cmd->add_option("--iplus", iplus_csv)->required();
  theta_quot_cmd->add_option("--truncate", truncation);
  theta_quot_cmd->add_option("--format", format);

  // qseries
  CLI::App* qseries_cmd = app.add_subcommand("qseries", "one-variable q-specialization");
  qseries_cmd->add_option("--type", type_spec)->required();
  qseries_cmd->add_option("--iplus", iplus_csv)->required();
  qseries_cmd->add_option("--order", truncation, "q-degree truncation");
  std::string qformat = "csv";
  qseries_cmd->add_option("--format", qformat);

  // parts project|fiber|enumerate
  CLI::App* parts_cmd = app.add_subcommand("parts", "colored partition operations");
  CLI::App* parts_project = parts_cmd->add_subcommand("project", "smallest I+-generated image");
  parts_project->add_option("--n", n)->required();
  parts_project->add_option("--iplus", iplus_csv)->required();
  parts_project->add_option("--partition", partition_csv)->required();
  CLI::App* parts_fiber = parts_cmd->add_subcommand("fiber", "all preimages of a projection");
  parts_fiber->add_option("--n", n)->required();
  parts_fiber->add_option("--iplus", iplus_csv)->required();
  parts_fiber->add_option("--partition", partition_csv)->required();
  CLI::App* parts_enum = parts_cmd->add_subcommand("enumerate", "I+-generated series");
  parts_enum->add_option("--n", n)->required();
  parts_enum->add_option("--iplus", iplus_csv)->required();
  parts_enum->add_option("--bound", bound);
  parts_enum->add_option("--format", format);

  // fock verify|rectangle
  CLI::App* fock_cmd = app.add_subcommand("fock", "operator model");
  CLI::App* fock_verify = fock_cmd->add_subcommand("verify", "sampled relation checks");
  fock_verify->add_option("--n", n);
  fock_verify->add_option("--samples", samples);
  fock_verify->add_option("--max-boxes", max_boxes);
  fock_verify->add_option("--seed", seed);
  CLI::App* fock_rect = fock_cmd->add_subcommand("rectangle", "labeled rectangle module");
  fock_rect->add_option("--n", n)->required();
  fock_rect->add_option("--a", ra)->required();
  fock_rect->add_option("--b", rb)->required();
  fock_rect->add_option("--c", rc)->required();

  // verify <suite>
  CLI::App* verify_cmd = app.add_subcommand("verify", "named exact verification suites");
  verify_cmd->add_option("suite", suite, "cartan|substitution|theta|fibers|fock|all");
  verify_cmd->add_option("--seed", seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream err;
    if (e.get_exit_code() == 0) {
      // --help and friends
      err << app.help();
      return {0, err.str()};
    }
    err << e.what() << "\n" << app.help();
    return {2, err.str()};
  }

  try {
    if (describe->parsed()) {
      out << describe_diagram(parse_diagram(type_spec));
    } else if (subst->parsed()) {
      Diagram d = parse_diagram(type_spec);
      std::set<int> ip = parse_subset(iplus_sub, d);
      std::set<int> I0;
      for (int v : d.vertices)
        if (!ip.count(v)) I0.insert(v);
      out << describe_substitution(Substitution::build(d, I0));
    } else if (series->parsed()) {
      Diagram d = parse_diagram(type_spec);
      if (d.family != Family::A || !d.affine)
        throw std::invalid_argument("series enumeration is defined for affine type A");
      if (series_full->parsed()) {
        out << emit_series(parts::enumerate_Z_full(d.rank, truncation), format);
      } else {
        std::set<int> ip = parse_subset(iplus_csv, d);
        out << emit_series(parts::enumerate_Z_quot(d.rank, ip, truncation), format);
      }
    } else if (theta_cmd->parsed()) {
      Diagram d = parse_diagram(type_spec);
      if (theta_full_cmd->parsed()) {
        out << emit_series(theta::theta_full(d, truncation), format);
      } else {
        std::set<int> ip = parse_subset(iplus_csv, d);
        out << emit_series(theta::theta_quot(d, ip, truncation), format);
      }
    } else if (qseries_cmd->parsed()) {
      Diagram d = parse_diagram(type_spec);
      std::set<int> ip = parse_subset(iplus_csv, d);
      out << emit_qseries(theta::q_specialize(theta::theta_quot(d, ip, truncation)), qformat);
    } else if (parts_cmd->parsed()) {
      Diagram d = build_diagram(Family::A, n, true);
      std::set<int> ip = parse_subset(iplus_csv, d);
      if (parts_project->parsed()) {
        out << parts::project(Partition::parse(partition_csv), ip, n).to_string() << "\n";
      } else if (parts_fiber->parsed()) {
        auto fib = parts::fiber(Partition::parse(partition_csv), ip, n);
        for (const Partition& p : fib) out << p.to_string() << "\n";
        out << "count: " << fib.size() << "\n";
      } else {
        out << emit_series(parts::enumerate_Z_quot(n, ip, bound), format);
      }
    } else if (fock_cmd->parsed()) {
      if (fock_verify->parsed()) {
        fock::check_integer_relations(samples, max_boxes, seed);
        out << "ok    integer-label relations (" << samples << " samples, <= " << max_boxes
            << " boxes)\n";
        fock::check_periodic_relations(n, samples, max_boxes, seed + 1);
        out << "ok    periodic relations mod " << (n + 1) << " (" << samples << " samples)\n";
        return {0, out.str()};
      }
      fock::RectangleModule r = fock::rectangle_module(n, ra, rb, rc);
      out << "rectangle " << r.width << " x " << r.height << ", path {";
      for (size_t i = 0; i < r.path.size(); ++i) out << (i ? "," : "") << r.path[i];
      out << "}, dim " << r.dim() << "\n";
      for (const Partition& p : r.basis) out << "  " << p.to_string() << "\n";
    } else if (verify_cmd->parsed()) {
      auto res = qv::verify::run_suite(suite, seed);
      out << res.report;
      return {res.ok ? 0 : 1, out.str()};
    }
  } catch (const std::exception& e) {
    out << "error: " << e.what() << "\n";
    return {1, out.str()};
  }
  return {0, out.str()};
}

}  // namespace qv::cli
