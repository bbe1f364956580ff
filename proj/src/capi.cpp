#include "kmcrystal.h"

#include <cstring>
#include <new>
#include <string>

#include "cartan.hpp"
#include "explorer.hpp"
#include "folding.hpp"
#include "tensor.hpp"
#include "virtcheck.hpp"

struct kmc_cartan_s {
  kmc::CartanPtr matrix;
};

struct kmc_graph_s {
  kmc::CrystalGraph graph;
};

struct kmc_folding_s {
  kmc::FoldedDiagram diagram;
};

namespace {

thread_local std::string g_last_error;

kmc_status status_of(kmc::ErrorCode code) {
  using kmc::ErrorCode;
  switch (code) {
    case ErrorCode::Parse: return KMC_ERR_PARSE;
    case ErrorCode::BadDiagonal: return KMC_ERR_BAD_DIAGONAL;
    case ErrorCode::PositiveOffDiagonal: return KMC_ERR_POSITIVE_OFF_DIAGONAL;
    case ErrorCode::AsymmetricZeroPattern:
      return KMC_ERR_ASYMMETRIC_ZERO_PATTERN;
    case ErrorCode::NotSymmetrizable: return KMC_ERR_NOT_SYMMETRIZABLE;
    case ErrorCode::UnknownIndex: return KMC_ERR_UNKNOWN_INDEX;
    case ErrorCode::NotFiniteType: return KMC_ERR_NOT_FINITE_TYPE;
    case ErrorCode::NotDominant: return KMC_ERR_NOT_DOMINANT;
    case ErrorCode::StringNotFound: return KMC_ERR_STRING_NOT_FOUND;
    case ErrorCode::NonIntegralC: return KMC_ERR_NON_INTEGRAL_C;
    case ErrorCode::MultiEdgeDetected: return KMC_ERR_MULTI_EDGE;
    case ErrorCode::NotInVirtualImage: return KMC_ERR_NOT_IN_VIRTUAL_IMAGE;
    case ErrorCode::IncomparableDepths: return KMC_ERR_INCOMPARABLE_DEPTHS;
    case ErrorCode::InvalidArgument: return KMC_ERR_INVALID_ARGUMENT;
    case ErrorCode::Internal: return KMC_ERR_INTERNAL;
  }
  return KMC_ERR_INTERNAL;
}

template <typename Fn>
kmc_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const kmc::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return KMC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return KMC_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<kmc::Int> copy_weight(const long long* data, size_t rank) {
  return std::vector<kmc::Int>(data, data + rank);
}

}  // namespace

extern "C" {

const char* kmc_version(void) { return "1.0.0"; }

const char* kmc_status_name(kmc_status status) {
  switch (status) {
    case KMC_OK: return "KMC_OK";
    case KMC_ERR_PARSE: return "KMC_ERR_PARSE";
    case KMC_ERR_BAD_DIAGONAL: return "KMC_ERR_BAD_DIAGONAL";
    case KMC_ERR_POSITIVE_OFF_DIAGONAL:
      return "KMC_ERR_POSITIVE_OFF_DIAGONAL";
    case KMC_ERR_ASYMMETRIC_ZERO_PATTERN:
      return "KMC_ERR_ASYMMETRIC_ZERO_PATTERN";
    case KMC_ERR_NOT_SYMMETRIZABLE: return "KMC_ERR_NOT_SYMMETRIZABLE";
    case KMC_ERR_UNKNOWN_INDEX: return "KMC_ERR_UNKNOWN_INDEX";
    case KMC_ERR_NOT_FINITE_TYPE: return "KMC_ERR_NOT_FINITE_TYPE";
    case KMC_ERR_NOT_DOMINANT: return "KMC_ERR_NOT_DOMINANT";
    case KMC_ERR_STRING_NOT_FOUND: return "KMC_ERR_STRING_NOT_FOUND";
    case KMC_ERR_NON_INTEGRAL_C: return "KMC_ERR_NON_INTEGRAL_C";
    case KMC_ERR_MULTI_EDGE: return "KMC_ERR_MULTI_EDGE";
    case KMC_ERR_NOT_IN_VIRTUAL_IMAGE: return "KMC_ERR_NOT_IN_VIRTUAL_IMAGE";
    case KMC_ERR_INCOMPARABLE_DEPTHS: return "KMC_ERR_INCOMPARABLE_DEPTHS";
    case KMC_ERR_INVALID_ARGUMENT: return "KMC_ERR_INVALID_ARGUMENT";
    case KMC_ERR_PROPERTY_VIOLATION: return "KMC_ERR_PROPERTY_VIOLATION";
    case KMC_ERR_INTERNAL: return "KMC_ERR_INTERNAL";
  }
  return "KMC_ERR_UNKNOWN";
}

const char* kmc_last_error(void) { return g_last_error.c_str(); }

void kmc_string_free(char* text) { delete[] text; }

kmc_status kmc_cartan_parse(const char* spec, kmc_cartan** out) {
  if (!spec || !out) {
    g_last_error = "null argument";
    return KMC_ERR_INVALID_ARGUMENT;
  }
  return guarded([&]() {
    auto matrix =
        std::make_shared<const kmc::CartanMatrix>(kmc::CartanMatrix::parse(spec));
    *out = new kmc_cartan_s{std::move(matrix)};
    return KMC_OK;
  });
}

void kmc_cartan_free(kmc_cartan* cartan) { delete cartan; }

long long kmc_cartan_rank(const kmc_cartan* cartan) {
  return cartan ? static_cast<long long>(cartan->matrix->rank()) : 0;
}

char* kmc_cartan_to_json(const kmc_cartan* cartan) {
  if (!cartan) return nullptr;
  return dup_string(cartan->matrix->to_json().dump() + "\n");
}

kmc_status kmc_cartan_symmetrizer(const kmc_cartan* cartan, long long* d) {
  if (!cartan || !d) {
    g_last_error = "null argument";
    return KMC_ERR_INVALID_ARGUMENT;
  }
  return guarded([&]() {
    kmc::Symmetrizer sym = kmc::symmetrize(*cartan->matrix);
    for (size_t a = 0; a < sym.d.size(); ++a) d[a] = sym.d[a];
    return KMC_OK;
  });
}

kmc_status kmc_weyl_dimension(const kmc_cartan* cartan, const long long* lambda,
                              long long* dim) {
  if (!cartan || !lambda || !dim) {
    g_last_error = "null argument";
    return KMC_ERR_INVALID_ARGUMENT;
  }
  return guarded([&]() {
    kmc::Weight w = kmc::Weight::zero(cartan->matrix->rank());
    w.lambda = copy_weight(lambda, cartan->matrix->rank());
    *dim = kmc::weyl_dimension(*cartan->matrix, w);
    return KMC_OK;
  });
}

kmc_status kmc_generate(const kmc_cartan* cartan, const long long* lambda,
                        long long depth, long long max_nodes, kmc_graph** out) {
  if (!cartan || !out) {
    g_last_error = "null argument";
    return KMC_ERR_INVALID_ARGUMENT;
  }
  return guarded([&]() {
    kmc::GenerateOptions options;
    if (depth >= 0) options.depth = depth;
    if (max_nodes > 0) options.max_nodes = static_cast<size_t>(max_nodes);
    std::optional<std::vector<kmc::Int>> hw;
    if (lambda) hw = copy_weight(lambda, cartan->matrix->rank());
    auto graph = kmc::generate(cartan->matrix, std::move(hw), options);
    *out = new kmc_graph_s{std::move(graph)};
    return KMC_OK;
  });
}

void kmc_graph_free(kmc_graph* graph) { delete graph; }

long long kmc_graph_node_count(const kmc_graph* graph) {
  return graph ? static_cast<long long>(graph->graph.nodes.size()) : 0;
}

long long kmc_graph_edge_count(const kmc_graph* graph) {
  return graph ? static_cast<long long>(graph->graph.edges.size()) : 0;
}

int kmc_graph_is_complete(const kmc_graph* graph) {
  return graph && graph->graph.complete ? 1 : 0;
}

char* kmc_graph_to_json(const kmc_graph* graph) {
  if (!graph) return nullptr;
  return dup_string(kmc::export_json(graph->graph));
}

char* kmc_graph_to_dot(const kmc_graph* graph) {
  if (!graph) return nullptr;
  return dup_string(kmc::export_dot(graph->graph));
}

char* kmc_graph_to_text(const kmc_graph* graph) {
  if (!graph) return nullptr;
  return dup_string(kmc::export_text(graph->graph));
}

kmc_status kmc_folding_build(const kmc_cartan* cartan, kmc_folding** out) {
  if (!cartan || !out) {
    g_last_error = "null argument";
    return KMC_ERR_INVALID_ARGUMENT;
  }
  return guarded([&]() {
    kmc::Symmetrizer sym = kmc::symmetrize(*cartan->matrix);
    auto diagram = kmc::build_folding(*cartan->matrix, sym);
    *out = new kmc_folding_s{std::move(diagram)};
    return KMC_OK;
  });
}

void kmc_folding_free(kmc_folding* folding) { delete folding; }

long long kmc_folding_vertex_count(const kmc_folding* folding) {
  return folding ? static_cast<long long>(folding->diagram.vertices.size()) : 0;
}

long long kmc_folding_edge_count(const kmc_folding* folding) {
  return folding ? static_cast<long long>(folding->diagram.edges.size()) : 0;
}

char* kmc_folding_to_json(const kmc_folding* folding) {
  if (!folding) return nullptr;
  return dup_string(folding->diagram.to_json().dump(2) + "\n");
}

char* kmc_folding_to_dot(const kmc_folding* folding) {
  if (!folding) return nullptr;
  return dup_string(folding->diagram.to_dot());
}

kmc_status kmc_folding_verify(const kmc_folding* folding,
                              const kmc_cartan* cartan, char** report_json) {
  if (!folding || !cartan || !report_json) {
    g_last_error = "null argument";
    return KMC_ERR_INVALID_ARGUMENT;
  }
  return guarded([&]() {
    auto report = kmc::verify_folding(folding->diagram, *cartan->matrix);
    *report_json = dup_string(report.to_json().dump(2) + "\n");
    return KMC_OK;
  });
}

kmc_status kmc_virtcheck(const kmc_cartan* cartan, long long depth,
                         char** report_json) {
  if (!cartan || !report_json || depth < 0) {
    g_last_error = depth < 0 ? "depth must be >= 0" : "null argument";
    return KMC_ERR_INVALID_ARGUMENT;
  }
  return guarded([&]() {
    auto sweep = kmc::run_virtualization_sweep(cartan->matrix, depth);
    *report_json = dup_string(sweep.to_json().dump(2) + "\n");
    if (!sweep.passed()) {
      g_last_error = "virtualization sweep found violations";
      return KMC_ERR_PROPERTY_VIOLATION;
    }
    return KMC_OK;
  });
}

kmc_status kmc_decompose(const kmc_cartan* cartan, const long long* mu,
                         const long long* lambda, long long depth,
                         char** result_json) {
  if (!cartan || !mu || !lambda || !result_json) {
    g_last_error = "null argument";
    return KMC_ERR_INVALID_ARGUMENT;
  }
  return guarded([&]() {
    size_t rank = cartan->matrix->rank();
    std::optional<kmc::Int> bound;
    if (depth >= 0) bound = depth;
    auto result = kmc::lr_decompose(cartan->matrix, copy_weight(mu, rank),
                                    copy_weight(lambda, rank), bound);
    *result_json = dup_string(result.to_json().dump(2) + "\n");
    return KMC_OK;
  });
}

}  // extern "C"
