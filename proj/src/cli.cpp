#include "prodint/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "prodint/concrete.hpp"
#include "prodint/parser.hpp"
#include "prodint/report.hpp"

namespace prodint {

namespace {

std::string read_file(const std::string &path) {
  std::ifstream f(path);
  if (!f)
    throw config_error("cannot open program file: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

struct analyze_opts {
  std::string program_path;
  std::string domains = "interval";
  std::string product = "none";
  std::string reductions;
  std::string power_pivot;
  std::string power_exponent = "interval-atoms";
  std::string power_atoms;
  std::string array_power = "off";
  int widening_delay = 1;
  bool oracle = false;
  std::string format = "text";
  std::string out_path;
};

run_config build_config(const analyze_opts &o) {
  run_config cfg = parse_domain_list(o.domains);
  cfg.product = parse_product_kind(o.product);
  if (!o.reductions.empty()) {
    std::stringstream ss(o.reductions);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty())
        cfg.reductions.push_back(parse_reduction_name(item));
  }
  cfg.power_pivot = o.power_pivot;
  cfg.power_exponent = parse_exponent_kind(o.power_exponent);
  if (!o.power_atoms.empty())
    cfg.power_atoms = parse_atoms(cfg.power_exponent, o.power_atoms);
  cfg.array_power = parse_array_power_mode(o.array_power);
  cfg.widening_delay = o.widening_delay;
  cfg.oracle = o.oracle;
  cfg.format = o.format;
  cfg.out_path = o.out_path;
  if (const char *cap = std::getenv("PRODINT_CAP"))
    cfg.visit_cap = std::stoll(cap);
  cfg.validate();
  return cfg;
}

int run_analyze(const analyze_opts &o, std::ostream &out, std::ostream &err) {
  const run_config cfg_run = build_config(o);
  const program prog = parse(read_file(o.program_path));
  const cfg graph = build_cfg(prog);
  const analysis_result result = analyze(graph, prog, cfg_run);

  soundness_report sound;
  bool ran_oracle = false;
  if (cfg_run.oracle) {
    const collect_result collected = collect_concrete(prog, graph);
    if (collected.partial)
      err << "warning: oracle hit its step bound; result is partial\n";
    sound = check_soundness(result, collected, graph, cfg_run);
    ran_oracle = true;
  }

  report_input in;
  in.program_path = o.program_path;
  in.config = &cfg_run;
  in.graph = &graph;
  in.result = &result;
  in.soundness = ran_oracle ? &sound : nullptr;

  out << (cfg_run.format == "json" ? render_json(in) : render_text(in));
  if (!cfg_run.out_path.empty()) {
    std::ofstream f(cfg_run.out_path);
    if (!f)
      throw config_error("cannot write: " + cfg_run.out_path);
    f << render_json(in);
  }

  if (ran_oracle && !sound.ok())
    return 3;
  return result.all_proved() ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"prodint - product-domain static analyzer for the tiny "
               "array language"};
  app.require_subcommand(1);

  analyze_opts o;
  CLI::App *an = app.add_subcommand("analyze", "analyze a .tiny program");
  an->add_option("program", o.program_path, "program file")->required();
  an->add_option("--domains", o.domains,
                 "comma list of interval,parity,sign,congruence,bool,diff");
  an->add_option("--product", o.product,
                 "none|cartesian|reduced|granger|power");
  an->add_option("--reductions", o.reductions,
                 "comma list of interval-parity,interval-congruence,"
                 "intervals-to-diff");
  an->add_option("--power-pivot", o.power_pivot, "pivot variable");
  an->add_option("--power-exponent", o.power_exponent,
                 "parity|bool|interval-atoms");
  an->add_option("--power-atoms", o.power_atoms,
                 "semicolon list, e.g. \"(-inf,2];[3,+inf)\" or odd;even or "
                 "true;false");
  an->add_option("--array-power", o.array_power,
                 "off|value-parity|index-parity");
  an->add_option("--widening-delay", o.widening_delay,
                 "loop-head joins before widening kicks in");
  an->add_flag("--oracle", o.oracle,
               "run the concrete collecting oracle and check soundness");
  an->add_option("--format", o.format, "text|json");
  an->add_option("--out", o.out_path, "also write the json report here");

  std::vector<std::string> argv_vec;
  argv_vec.push_back("prodint");
  argv_vec.insert(argv_vec.end(), args.begin(), args.end());
  std::vector<const char *> argv;
  argv.reserve(argv_vec.size());
  for (const std::string &a : argv_vec)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    std::ostringstream msg;
    const int code = app.exit(e, out, msg);
    err << msg.str();
    return code == 0 ? 0 : 2;
  }

  try {
    return run_analyze(o, out, err);
  } catch (const parse_error &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const config_error &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const analysis_error &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace prodint
