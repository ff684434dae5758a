// Copyright 2026 The kvstream Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kvstream/learning_flux.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "kvstream/error.hpp"

namespace kvstream::flux {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Optimal: return "Optimal";
    case Verdict::EnhanceFlux: return "EnhanceFlux";
    case Verdict::InsufficientData: return "InsufficientData";
  }
  return "InsufficientData";
}

double knowledge_flux(std::size_t tie_count, std::size_t decision_count) {
  if (decision_count == 0) throw Error(ErrorCode::NoDecisions, "no decisions in area");
  return static_cast<double>(tie_count) / static_cast<double>(decision_count);
}

double favorable_lcc_rate(std::span<const DecisionRecord> decisions) {
  std::size_t recorded = 0;
  std::size_t favorable = 0;
  for (const auto& d : decisions) {
    if (!d.lcc) continue;
    ++recorded;
    if (d.lcc->consequence == Consequence::LC1 || d.lcc->consequence == Consequence::LC2) {
      ++favorable;
    }
  }
  if (recorded == 0) {
    throw Error(ErrorCode::NoRecordedOutcomes, "no decision has a recorded learning-cycle outcome");
  }
  return static_cast<double>(favorable) / static_cast<double>(recorded);
}

Verdict verdict_for(std::optional<double> favorable_rate, const FluxConfig& cfg) {
  if (!favorable_rate) return Verdict::InsufficientData;
  return *favorable_rate >= cfg.favorable_threshold ? Verdict::Optimal : Verdict::EnhanceFlux;
}

FluxAssessment flux_assessment(const KnowledgeArea& area, const FlowGraph& graph,
                               std::span<const DecisionRecord> decisions,
                               const FluxConfig& cfg) {
  FluxAssessment a;
  a.area = area.id;
  a.tie_count = graph.ties().size();
  a.decision_count = decisions.size();
  a.flux = knowledge_flux(a.tie_count, a.decision_count);
  const bool any_recorded =
      std::any_of(decisions.begin(), decisions.end(), [](const auto& d) { return d.lcc.has_value(); });
  if (any_recorded) a.favorable_rate = favorable_lcc_rate(decisions);
  a.verdict = verdict_for(a.favorable_rate, cfg);
  switch (a.verdict) {
    case Verdict::Optimal:
      a.recommendation = "Flux level optimal; sustain current knowledge ties";
      break;
    case Verdict::EnhanceFlux:
      a.recommendation =
          "Enhance knowledge flux: increase knowledge ties / bring additional knowledge "
          "actors (experts, explicit sources such as design databases)";
      break;
    case Verdict::InsufficientData:
      a.recommendation = "Record learning-cycle outcomes to assess flux";
      break;
  }
  return a;
}

LccDistribution lcc_distribution(std::span<const DecisionRecord> decisions, AreaId area) {
  LccDistribution dist;
  dist.area = std::move(area);
  for (const auto& d : decisions) {
    if (d.lcc) {
      ++dist.counts[{d.lcc->consequence, d.lcc->duration}];
      ++dist.recorded_total;
    } else {
      ++dist.unrecorded_total;
    }
  }
  return dist;
}

EncodedMatrix encode_decision_matrix(std::span<const DecisionRecord> decisions,
                                     const Codebook& codebook) {
  EncodedMatrix m;
  if (decisions.empty()) return m;

  for (const auto& [name, v] : decisions.front().attributes) m.raw_dim_names.push_back(name);
  for (const auto& d : decisions) {
    bool same = d.attributes.size() == m.raw_dim_names.size();
    for (std::size_t j = 0; same && j < m.raw_dim_names.size(); ++j) {
      same = d.attributes.contains(m.raw_dim_names[j]);
    }
    if (!same) {
      throw Error(ErrorCode::HeterogeneousAttributes,
                  "decision " + d.id + " does not share the attribute set of " +
                      decisions.front().id);
    }
  }

  const auto rows = static_cast<Eigen::Index>(decisions.size());
  const auto cols = static_cast<Eigen::Index>(m.raw_dim_names.size());
  m.raw.resize(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& d = decisions[static_cast<std::size_t>(i)];
    m.row_ids.push_back(d.id);
    for (Eigen::Index j = 0; j < cols; ++j) {
      const auto& name = m.raw_dim_names[static_cast<std::size_t>(j)];
      const auto& value = d.attributes.at(name);
      if (const auto* num = std::get_if<double>(&value)) {
        m.raw(i, j) = *num;
        continue;
      }
      const auto& category = std::get<std::string>(value);
      auto table = codebook.find(name);
      if (table == codebook.end() || !table->second.contains(category)) {
        throw Error(ErrorCode::MissingCodebookEntry,
                    "attribute '" + name + "' value '" + category + "' (decision " + d.id + ")");
      }
      m.raw(i, j) = table->second.at(category);
    }
  }

  std::vector<Eigen::Index> kept;
  std::vector<double> means, sds;
  for (Eigen::Index j = 0; j < cols; ++j) {
    const double mean = m.raw.col(j).mean();
    const double ss = (m.raw.col(j).array() - mean).square().sum();
    const double sd = rows > 1 ? std::sqrt(ss / static_cast<double>(rows - 1)) : 0.0;
    const auto& name = m.raw_dim_names[static_cast<std::size_t>(j)];
    if (sd == 0.0) {
      m.dropped_columns.push_back(name);
      continue;
    }
    kept.push_back(j);
    means.push_back(mean);
    sds.push_back(sd);
    m.dim_names.push_back(name);
  }
  m.standardized.resize(rows, static_cast<Eigen::Index>(kept.size()));
  for (std::size_t k = 0; k < kept.size(); ++k) {
    const auto col = static_cast<Eigen::Index>(k);
    m.standardized.col(col) = (m.raw.col(kept[k]).array() - means[k]) / sds[k];
  }
  return m;
}

PrincipalComponent first_principal_component(const Eigen::MatrixXd& data) {
  if (data.rows() < 2 || data.cols() < 1) {
    throw Error(ErrorCode::DegenerateData, "need at least 2 rows and 1 column, got " +
                                               std::to_string(data.rows()) + "x" +
                                               std::to_string(data.cols()));
  }
  const Eigen::MatrixXd centered = data.rowwise() - data.colwise().mean();
  const Eigen::MatrixXd cov =
      (centered.adjoint() * centered) / static_cast<double>(data.rows() - 1);
  if ((cov.array() == 0.0).all()) {
    throw Error(ErrorCode::DegenerateData, "covariance matrix is all zero");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::DegenerateData, "eigendecomposition did not converge");
  }
  const Eigen::Index top = cov.rows() - 1;  // eigenvalues ascend
  PrincipalComponent pc;
  pc.eigenvalue = std::max(0.0, solver.eigenvalues()(top));
  pc.direction = solver.eigenvectors().col(top).normalized();
  // Loadings equal in magnitude up to rounding (common after
  // standardization) count as tied; the first of them decides the sign.
  const double peak = pc.direction.cwiseAbs().maxCoeff();
  Eigen::Index largest = 0;
  while (std::abs(pc.direction(largest)) < peak * (1.0 - 1e-9)) ++largest;
  if (pc.direction(largest) < 0) pc.direction = -pc.direction;
  return pc;
}

std::vector<ProjectionPoint> project_decisions_1d(std::span<const DecisionRecord> decisions,
                                                  const Codebook& codebook) {
  std::vector<DecisionRecord> recorded;
  for (const auto& d : decisions) {
    if (d.lcc) recorded.push_back(d);
  }
  if (recorded.empty()) {
    throw Error(ErrorCode::NoRecordedOutcomes, "no decision has a recorded outcome to plot");
  }
  const auto m = encode_decision_matrix(recorded, codebook);
  const auto pc = first_principal_component(m.standardized);
  const Eigen::VectorXd coords = m.standardized * pc.direction;

  std::vector<ProjectionPoint> out;
  for (std::size_t i = 0; i < recorded.size(); ++i) {
    out.push_back({recorded[i].id, coords(static_cast<Eigen::Index>(i)),
                   recorded[i].lcc->consequence});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.coordinate != b.coordinate) return a.coordinate < b.coordinate;
    return a.decision < b.decision;
  });
  return out;
}

double uncertainty_from_lcc(std::span<const DecisionRecord> decisions, const LccWeights& w) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& d : decisions) {
    if (!d.lcc) continue;
    sum += w.of(*d.lcc);
    ++n;
  }
  if (n == 0) {
    throw Error(ErrorCode::NoRecordedOutcomes, "no decision has a recorded learning-cycle outcome");
  }
  return sum / static_cast<double>(n);
}

}  // namespace kvstream::flux
