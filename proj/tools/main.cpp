#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kmcrystal.h"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitViolation = 3;

struct CartanHandle {
  kmc_cartan* ptr = nullptr;
  ~CartanHandle() { kmc_cartan_free(ptr); }
};

struct GraphHandle {
  kmc_graph* ptr = nullptr;
  ~GraphHandle() { kmc_graph_free(ptr); }
};

struct FoldingHandle {
  kmc_folding* ptr = nullptr;
  ~FoldingHandle() { kmc_folding_free(ptr); }
};

std::string take_string(char* text) {
  std::string out = text ? text : "";
  kmc_string_free(text);
  return out;
}

[[noreturn]] void fail_domain(const std::string& context) {
  std::cerr << "error: " << context << ": " << kmc_last_error() << "\n";
  std::exit(kExitDomain);
}

[[noreturn]] void fail_usage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(kExitUsage);
}

/// A cartan spec is a named type, inline JSON, or a path to a JSON file.
std::string load_cartan_spec(const std::string& arg) {
  std::ifstream file(arg);
  if (file.good()) {
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
  }
  return arg;
}

kmc_cartan* parse_cartan_or_die(const std::string& arg) {
  kmc_cartan* out = nullptr;
  kmc_status status = kmc_cartan_parse(load_cartan_spec(arg).c_str(), &out);
  if (status != KMC_OK) fail_domain("parsing cartan matrix");
  return out;
}

std::vector<long long> parse_weight(const std::string& text, long long rank) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stoll(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail_usage("bad weight coefficient '" + item + "' in '" + text + "'");
    }
  }
  if (static_cast<long long>(out.size()) != rank)
    fail_usage("weight '" + text + "' has " + std::to_string(out.size()) +
               " coefficients, expected " + std::to_string(rank));
  return out;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) fail_usage("cannot open output file " + path);
  file << text;
}

int run_gen(const std::string& cartan_arg, const std::string& hw,
            long long depth, long long max_nodes, const std::string& format,
            const std::string& output) {
  CartanHandle cartan{parse_cartan_or_die(cartan_arg)};
  std::optional<std::vector<long long>> lambda;
  if (hw != "inf")
    lambda = parse_weight(hw, kmc_cartan_rank(cartan.ptr));
  else if (depth < 0)
    fail_usage("--depth is required with --hw inf");

  GraphHandle graph;
  kmc_status status =
      kmc_generate(cartan.ptr, lambda ? lambda->data() : nullptr, depth,
                   max_nodes, &graph.ptr);
  if (status != KMC_OK) fail_domain("generating crystal");

  std::string text;
  if (format == "dot")
    text = take_string(kmc_graph_to_dot(graph.ptr));
  else if (format == "json")
    text = take_string(kmc_graph_to_json(graph.ptr));
  else
    text = take_string(kmc_graph_to_text(graph.ptr));
  write_output(text, output);
  return 0;
}

int run_fold(const std::string& cartan_arg, const std::string& format,
             const std::string& output) {
  CartanHandle cartan{parse_cartan_or_die(cartan_arg)};
  FoldingHandle folding;
  if (kmc_folding_build(cartan.ptr, &folding.ptr) != KMC_OK)
    fail_domain("building folding");
  char* report_raw = nullptr;
  if (kmc_folding_verify(folding.ptr, cartan.ptr, &report_raw) != KMC_OK)
    fail_domain("verifying folding");
  std::string report_text = take_string(report_raw);

  if (format == "dot") {
    write_output(take_string(kmc_folding_to_dot(folding.ptr)), output);
    return 0;
  }
  if (format == "json") {
    auto j = nlohmann::json::parse(
        take_string(kmc_folding_to_json(folding.ptr)));
    j["verify"] = nlohmann::json::parse(report_text);
    write_output(j.dump(2) + "\n", output);
    return 0;
  }

  auto fold_json =
      nlohmann::json::parse(take_string(kmc_folding_to_json(folding.ptr)));
  auto report = nlohmann::json::parse(report_text);
  std::ostringstream os;
  os << "N = " << fold_json["N"].get<long long>() << "\n";
  os << "vertices: " << kmc_folding_vertex_count(folding.ptr) << "\n";
  os << "edges: " << kmc_folding_edge_count(folding.ptr) << "\n";
  os << "orbits:";
  for (auto& [vertex, orbit] : fold_json["orbit"].items())
    os << " " << vertex << "->" << orbit.get<std::string>();
  os << "\n";
  for (const auto& check : report["checks"])
    os << (check["passed"].get<bool>() ? "  [pass] " : "  [FAIL] ")
       << check["name"].get<std::string>()
       << (check["detail"].get<std::string>().empty()
               ? ""
               : ": " + check["detail"].get<std::string>())
       << "\n";
  os << (report["passed"].get<bool>() ? "all checks passed"
                                      : "CHECKS FAILED")
     << "\n";
  write_output(os.str(), output);
  return report["passed"].get<bool>() ? 0 : kExitViolation;
}

int run_virtcheck(const std::string& cartan_arg, long long depth,
                  const std::string& output) {
  CartanHandle cartan{parse_cartan_or_die(cartan_arg)};
  char* report_raw = nullptr;
  kmc_status status = kmc_virtcheck(cartan.ptr, depth, &report_raw);
  if (status != KMC_OK && status != KMC_ERR_PROPERTY_VIOLATION)
    fail_domain("running virtualization sweep");
  write_output(take_string(report_raw), output);
  return status == KMC_OK ? 0 : kExitViolation;
}

int run_decompose(const std::string& cartan_arg, const std::string& mu_arg,
                  const std::string& lambda_arg, long long depth,
                  const std::string& format, const std::string& output) {
  CartanHandle cartan{parse_cartan_or_die(cartan_arg)};
  long long rank = kmc_cartan_rank(cartan.ptr);
  auto mu = parse_weight(mu_arg, rank);
  auto lambda = parse_weight(lambda_arg, rank);

  char* result_raw = nullptr;
  if (kmc_decompose(cartan.ptr, mu.data(), lambda.data(), depth,
                    &result_raw) != KMC_OK)
    fail_domain("decomposing tensor product");
  std::string result_text = take_string(result_raw);
  if (format == "json") {
    write_output(result_text, output);
    return 0;
  }

  auto result = nlohmann::json::parse(result_text);
  std::ostringstream os;
  os << "B(mu) (x) B(lambda), mu = [" << mu_arg << "], lambda = ["
     << lambda_arg << "]\n";
  os << "component        multiplicity  dimension\n";
  bool have_dims = true;
  long long dim_total = 0;
  for (const auto& comp : result["components"]) {
    auto weight = comp["weight"].get<std::vector<long long>>();
    std::string weight_text = "[";
    for (size_t i = 0; i < weight.size(); ++i)
      weight_text += (i ? "," : "") + std::to_string(weight[i]);
    weight_text += "]";
    long long multiplicity = comp["multiplicity"].get<long long>();
    long long dim = 0;
    if (have_dims &&
        kmc_weyl_dimension(cartan.ptr, weight.data(), &dim) != KMC_OK)
      have_dims = false;
    os << "  " << weight_text;
    for (size_t pad = weight_text.size(); pad < 15; ++pad) os << ' ';
    os << multiplicity;
    if (have_dims) {
      os << "             " << dim;
      dim_total += multiplicity * dim;
    }
    os << "\n";
  }
  os << "components: " << result["components"].size() << "\n";
  if (have_dims) os << "total dimension: " << dim_total << "\n";
  if (result["partial"].get<bool>())
    os << "WARNING: enumeration truncated; result is partial\n";
  write_output(os.str(), output);
  return 0;
}

int run_validate(const std::string& cartan_arg, const std::string& format,
                 const std::string& output) {
  CartanHandle cartan{parse_cartan_or_die(cartan_arg)};
  long long rank = kmc_cartan_rank(cartan.ptr);
  std::vector<long long> d(static_cast<size_t>(rank), 0);
  if (kmc_cartan_symmetrizer(cartan.ptr, d.data()) != KMC_OK)
    fail_domain("computing symmetrizer");

  auto j = nlohmann::json::parse(take_string(kmc_cartan_to_json(cartan.ptr)));
  if (format == "json") {
    j["symmetrizer"] = d;
    write_output(j.dump(2) + "\n", output);
    return 0;
  }
  std::ostringstream os;
  os << "valid generalized Cartan matrix, rank " << rank << "\n";
  os << "labels:";
  for (const auto& label : j["labels"]) os << " " << label.get<std::string>();
  os << "\nmatrix:\n";
  for (const auto& row : j["matrix"]) {
    os << " ";
    for (const auto& entry : row) os << " " << entry.get<long long>();
    os << "\n";
  }
  os << "symmetrizer:";
  for (long long v : d) os << " " << v;
  os << "\n";
  write_output(os.str(), output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rigged-configuration crystals for symmetrizable Kac-Moody types"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kmc_version()));

  std::string cartan_arg, hw = "inf", format, output, mu_arg, lambda_arg;
  long long gen_depth = -1, virt_depth = 4, dec_depth = -1, max_nodes = -1;

  auto* gen = app.add_subcommand("gen", "generate a crystal graph");
  gen->add_option("--cartan", cartan_arg, "named type, JSON, or file")
      ->required();
  gen->add_option("--hw", hw, "'inf' or comma-separated dominant coefficients")
      ->required();
  gen->add_option("--depth", gen_depth, "f-application bound from the root");
  gen->add_option("--max-nodes", max_nodes, "safety cap on node count");
  gen->add_option("--format", format, "dot | json | text")
      ->default_val("text")
      ->check(CLI::IsMember({"dot", "json", "text"}));
  gen->add_option("--output,-o", output, "output path (default stdout)");

  auto* fold = app.add_subcommand("fold", "fold to simply-laced type");
  fold->add_option("--cartan", cartan_arg, "named type, JSON, or file")
      ->required();
  fold->add_option("--format", format, "text | json | dot")
      ->default_val("text")
      ->check(CLI::IsMember({"dot", "json", "text"}));
  fold->add_option("--output,-o", output, "output path (default stdout)");

  auto* virt = app.add_subcommand(
      "virtcheck", "sweep virtualization properties over RC(infinity)");
  virt->add_option("--cartan", cartan_arg, "named type, JSON, or file")
      ->required();
  virt->add_option("--depth", virt_depth, "sweep depth");
  virt->add_option("--output,-o", output, "output path (default stdout)");

  auto* dec = app.add_subcommand(
      "decompose", "Littlewood-Richardson decomposition of B(mu) (x) B(lambda)");
  dec->add_option("--cartan", cartan_arg, "named type, JSON, or file")
      ->required();
  dec->add_option("--mu", mu_arg, "comma-separated dominant coefficients")
      ->required();
  dec->add_option("--lambda", lambda_arg, "comma-separated dominant coefficients")
      ->required();
  dec->add_option("--depth", dec_depth, "enumeration bound for RC(mu)");
  dec->add_option("--format", format, "text | json")
      ->default_val("text")
      ->check(CLI::IsMember({"json", "text"}));
  dec->add_option("--output,-o", output, "output path (default stdout)");

  auto* val = app.add_subcommand("validate",
                                 "validate a Cartan matrix and echo its symmetrizer");
  val->add_option("--cartan", cartan_arg, "named type, JSON, or file")
      ->required();
  val->add_option("--format", format, "text | json")
      ->default_val("text")
      ->check(CLI::IsMember({"json", "text"}));
  val->add_option("--output,-o", output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (gen->parsed())
    return run_gen(cartan_arg, hw, gen_depth, max_nodes, format, output);
  if (fold->parsed()) return run_fold(cartan_arg, format, output);
  if (virt->parsed()) return run_virtcheck(cartan_arg, virt_depth, output);
  if (dec->parsed())
    return run_decompose(cartan_arg, mu_arg, lambda_arg, dec_depth, format, output);
  if (val->parsed()) return run_validate(cartan_arg, format, output);
  return kExitUsage;
}
