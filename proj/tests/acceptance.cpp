// Runs acceptance criteria 1..9 and prints one PASS/FAIL line for each.
// Exit status is nonzero if any criterion fails.

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "psi/checks.hpp"
#include "psi/koszul.hpp"
#include "psi/series.hpp"

using namespace psi;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// A report passes when nothing failed; informative records are findings.
Outcome judge(const Report& r) {
  Outcome o;
  std::size_t pass = 0, info = 0;
  for (const auto& c : r.checks) {
    if (c.status == Status::Fail) {
      o.ok = false;
      if (o.detail.empty())
        o.detail = "failed: " + c.name;
    } else if (c.status == Status::Informative) {
      ++info;
    } else if (c.status == Status::Pass) {
      ++pass;
    }
  }
  if (r.checks.empty()) {
    o.ok = false;
    o.detail = "no checks ran";
  }
  if (o.ok)
    o.detail = std::to_string(pass) + " checks passed" + (info ? ", " + std::to_string(info) + " informative" : "");
  return o;
}

Outcome require(Outcome o, bool cond, const std::string& what) {
  if (!cond && o.ok) {
    o.ok = false;
    o.detail = what;
  }
  return o;
}

const CheckRecord* find(const Report& r, const std::string& id, const std::string& name_part = "") {
  for (const auto& c : r.checks)
    if ((id.empty() || c.id == id) && c.name.find(name_part) != std::string::npos)
      return &c;
  return nullptr;
}

Outcome extra_checks(int criterion, const Report& r, Outcome o) {
  switch (criterion) {
    case 2:
      for (int n = 3; n <= 7; ++n) {
        auto s = lee_series(n, SeriesBound::total(2));
        auto eij = unit_vector(n, 1);
        eij[static_cast<std::size_t>(n - 1)] = 1;
        o = require(o, s.coefficient(unit_vector(n, n)) == n - 2, "coefficient at e_i");
        o = require(o, s.coefficient(eij) == (n - 2) * (n - 2) - (n - 3), "coefficient at e_i + e_j");
      }
      break;
    case 5:
      for (auto [label, dim] : {std::pair{"A_4", 5}, {"A_5", 7}, {"B_{2,2}", 3}}) {
        const auto* rec = find(r, "", std::string("Krull dimension of ") + label);
        o = require(o, rec && rec->got == dim, std::string("Krull dimension of ") + label);
      }
      break;
    case 8: {
      for (int n = 3; n <= 8; ++n) {
        const std::int64_t d = n * (n - 2);
        const std::int64_t b2 = binomial_i64(d, 2) + binomial_i64(n, 2) * (n - 3);
        o = require(o, koszul_prediction(n, 2)[2] == b2, "b_2 identity for n = " + std::to_string(n));
        o = require(o, tensor_relation_space(n).dim() == static_cast<std::size_t>(b2), "dim R for n = " + std::to_string(n));
      }
      auto r4 = tensor_relation_space(4);
      auto dims = intersection_dimensions(r4.basis(), r4.dim_v, 4);
      o = require(o, dims == std::vector<std::size_t>{1, 8, 34, 112, 341}, "dual dimensions for n = 4");
      auto p5 = koszul_prediction(5, 3);
      auto r5 = tensor_relation_space(5);
      auto d5 = intersection_dimensions(r5.basis(), r5.dim_v, 3);
      bool match5 = d5.size() == 4;
      for (std::size_t k = 0; match5 && k < 4; ++k)
        match5 = static_cast<std::int64_t>(d5[k]) == p5[k];
      // a mismatch here would be a finding, recorded as informative
      if (!match5)
        o.detail += "; n = 5 dual dimensions differ from the prediction";
      break;
    }
    default:
      break;
  }
  return o;
}

}  // namespace

int main() {
  CheckOptions base;
  base.seed = 1;
  base.threads = 1;

  bool all = true;
  std::vector<std::string> single_thread;
  for (int k = 1; k <= 8; ++k) {
    Outcome o;
    try {
      Report r = acceptance_report(k, base);
      single_thread.push_back(render(r, Format::Json));
      o = extra_checks(k, r, judge(r));
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
      single_thread.emplace_back();
    }
    all = all && o.ok;
    std::cout << "criterion " << k << " (" << acceptance_title(k) << "): " << (o.ok ? "PASS" : "FAIL") << ", "
              << o.detail << std::endl;
  }

  Outcome det;
  try {
    CheckOptions eight = base;
    eight.threads = 8;
    for (int k = 1; k <= 8 && det.ok; ++k) {
      auto again = render(acceptance_report(k, base), Format::Json);
      auto threaded = render(acceptance_report(k, eight), Format::Json);
      if (again != single_thread[static_cast<std::size_t>(k - 1)] || threaded != again) {
        det.ok = false;
        det.detail = "criterion " + std::to_string(k) + " report differs between runs";
      }
    }
    if (det.ok)
      det.detail = "reports for criteria 1-8 are byte-identical across repeated runs with 1 and 8 threads";
  } catch (const std::exception& e) {
    det = {false, std::string("exception: ") + e.what()};
  }
  all = all && det.ok;
  std::cout << "criterion 9 (determinism): " << (det.ok ? "PASS" : "FAIL") << ", " << det.detail << std::endl;
  return all ? 0 : 1;
}
