#include "commands.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "orbizeta/error.hpp"
#include "orbizeta/inertia.hpp"
#include "orbizeta/point_count.hpp"
#include "orbizeta/ring.hpp"
#include "orbizeta/spec_io.hpp"
#include "orbizeta/zeta.hpp"
#include "orbizeta/zeta_io.hpp"

namespace orbizeta::cli {

namespace {

using nlohmann::ordered_json;

template <typename F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return CommandResult{2, "", std::string("error: ") + e.what() + "\n"};
  }
}

ordered_json report_json(const Report& r) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"title", r.title}, {"passed", r.passed()}, {"checks", checks}};
}

std::string profile_string(const Sector& s) {
  std::string out;
  for (const auto& p : s.profile) {
    if (!out.empty()) out += " ";
    out += "H" + std::to_string(p.degree) + ":w=" + to_string(p.weight);
    if (p.multiplicity != 1) out += "x" + std::to_string(p.multiplicity);
  }
  return out;
}

std::string spec_title(const OrbifoldSpec& spec) {
  std::string title = spec.label.empty() ? family_tag(spec) : spec.label;
  if (spec.base.q) title += " over F_" + std::to_string(*spec.base.q);
  return title;
}

}  // namespace

CommandResult cmd_inertia(const std::string& spec_path, Format format) {
  return guarded([&] {
    OrbifoldSpec spec = load_spec(spec_path);
    InertiaDecomposition d = enumerate_sectors(spec);
    Report check = validate_decomposition(d);
    CommandResult result;
    result.exit_code = check.passed() ? 0 : 1;
    if (format == Format::Json) {
      result.out = decomposition_to_json(d) + "\n";
      return result;
    }
    std::ostringstream os;
    os << "# " << spec_title(spec) << ": ambient_dim=" << d.ambient_dim
       << " proper=" << (d.proper ? "yes" : "no") << " sectors=" << d.sectors.size() << "\n";
    os << std::left << std::setw(10) << "label" << std::setw(5) << "dim" << std::setw(8) << "age"
       << std::setw(10) << "inverse" << std::setw(5) << "aut" << "profile\n";
    for (const auto& s : d.sectors) {
      os << std::left << std::setw(10) << s.label.to_string() << std::setw(5) << s.dim << std::setw(8)
         << to_string(s.age) << std::setw(10) << s.inverse_label.to_string() << std::setw(5) << s.aut_order
         << profile_string(s) << "\n";
    }
    if (!check.passed()) os << check.to_text();
    result.out = os.str();
    return result;
  });
}

CommandResult cmd_zeta(const std::string& spec_path, const ZetaOptions& options) {
  return guarded([&] {
    OrbifoldSpec spec = load_spec(spec_path);
    if (options.q) {
      spec.base = FieldParam::specialized(*options.q);
      validate_spec(spec);
    }
    InertiaDecomposition d = enumerate_sectors(spec);
    ZetaFunction z = orbifold_zeta(d);
    bool ok = true;

    std::vector<std::string> notes;
    if (z.formal()) notes.push_back("formal: input is not proper; the zeta is a formal object");
    if (auto* b = std::get_if<ClassifyingBMu>(&spec.family); b && b->n > 1)
      notes.push_back("convention: each of the " + std::to_string(b->n) +
                      " sectors contributes one degree-0 class; bare B mu_n zetas are convention-dependent");

    std::optional<TraceSeries> traces;
    if (options.traces > 0) traces = trace_series(d, options.traces);

    std::optional<Report> verify;
    if (options.verify) {
      verify = verify_trace_formula(spec, spec.base.q, options.verify_max_r, oracle_budget_from_env());
      ok = ok && verify->passed();
    }

    std::optional<bool> recovered_match;
    std::optional<ZetaFunction> recovered;
    std::string recover_error;
    if (options.recover) {
      std::size_t length = std::max(options.traces, default_truncation(d));
      try {
        recovered = recover_zeta(trace_series(d, length));
        recovered_match = *recovered == z;
      } catch (const Error& e) {
        recover_error = e.what();
        recovered_match = false;
      }
      ok = ok && *recovered_match;
    }

    CommandResult result;
    result.exit_code = ok ? 0 : 1;
    if (options.format == Format::Json) {
      ordered_json doc;
      doc["zeta"] = ordered_json::parse(zeta_to_json(z));
      doc["notes"] = notes;
      if (traces) {
        doc["traces"] = ordered_json::parse(trace_series_to_json(*traces));
        if (spec.base.q) doc["traces_specialized"] = ordered_json::parse(trace_series_to_json(*traces, spec.base.q));
      }
      if (verify) doc["verify"] = report_json(*verify);
      if (recovered_match) {
        doc["recover"] = {{"match", *recovered_match},
                          {"zeta", recovered ? recovered->to_string() : std::string()},
                          {"error", recover_error}};
      }
      result.out = doc.dump(2) + "\n";
      return result;
    }

    std::ostringstream os;
    os << z.to_string() << "\n";
    for (const auto& n : notes) os << n << "\n";
    if (traces) {
      os << "traces: " << trace_series_to_json(*traces) << "\n";
      if (spec.base.q) os << "traces at q=" << *spec.base.q << ": " << trace_series_to_json(*traces, spec.base.q) << "\n";
    }
    if (verify) os << verify->to_text() << (verify->passed() ? "VERIFY PASS\n" : "VERIFY FAIL\n");
    if (recovered_match) {
      if (recovered)
        os << "recovered: " << recovered->to_string() << "\n";
      else
        os << "recover error: " << recover_error << "\n";
      os << (*recovered_match ? "RECOVER MATCH\n" : "RECOVER MISMATCH\n");
    }
    result.out = os.str();
    return result;
  });
}

CommandResult cmd_ring(const std::string& spec_path, const RingOptions& options) {
  return guarded([&] {
    OrbifoldSpec spec = load_spec(spec_path);
    GradedRing ring = build_ring(spec);
    std::ostringstream os;
    os << "# " << spec_title(spec) << ": rank " << ring.rank() << ", unit " << ring.basis()[ring.unit()].name << "\n";
    os << std::left << std::setw(8) << "basis" << std::setw(10) << "sector" << std::setw(8) << "degree"
       << std::setw(8) << "age" << std::setw(10) << "cr_degree" << "frobenius\n";
    RingMap forb = frobenius_orb(ring);
    for (std::size_t i = 0; i < ring.rank(); ++i) {
      const auto& b = ring.basis()[i];
      os << std::left << std::setw(8) << b.name << std::setw(10) << (b.label ? b.label->to_string() : "-")
         << std::setw(8) << b.degree << std::setw(8) << to_string(b.age) << std::setw(10)
         << to_string(b.cr_degree()) << forb.multipliers[i].normalized().to_string() << "\n";
    }
    os << "products:\n";
    for (std::size_t x = 0; x < ring.rank(); ++x)
      for (std::size_t y = x; y < ring.rank(); ++y) {
        const RingElement& p = ring.product(x, y);
        if (p.empty()) continue;
        os << "  " << ring.basis()[x].name << " * " << ring.basis()[y].name << " = " << ring.format(p) << "\n";
      }

    bool ok = true;
    if (options.verify_frobenius) {
      for (const Report& r : {verify_ring_axioms(ring), verify_grading(ring), verify_ring_hom(ring, forb)}) {
        os << r.to_text();
        ok = ok && r.passed();
      }
      os << (ok ? "FROBENIUS PASS\n" : "FROBENIUS FAIL\n");
    }
    if (options.negative_control) {
      Report control = verify_ring_hom(ring, untwisted_frobenius(ring));
      os << "negative control (untwisted Frobenius):\n" << control.to_text();
      if (control.passed()) {
        os << "CONTROL INCONCLUSIVE: the untwisted action is already multiplicative\n";
        ok = false;
      } else {
        os << "CONTROL OK: untwisted Frobenius fails to preserve the product, as expected\n";
      }
    }
    return CommandResult{ok ? 0 : 1, os.str(), ""};
  });
}

CommandResult cmd_compare(const std::string& spec_path, const std::string& zeta_path) {
  return guarded([&] {
    OrbifoldSpec spec = load_spec(spec_path);
    ZetaFunction resolution = load_zeta(zeta_path);
    Report report = crepant_compare(spec, resolution);
    ZetaFunction orbifold = orbifold_zeta(enumerate_sectors(spec));
    std::ostringstream os;
    os << "orbifold:   " << orbifold.to_string() << "\n";
    os << "resolution: " << resolution.to_string() << "\n";
    if (report.passed()) {
      os << "EQUAL\n";
    } else {
      os << "NOT EQUAL\n";
      for (const auto& f : report.failures()) os << "diff: " << f.name << " " << f.detail << "\n";
    }
    return CommandResult{report.passed() ? 0 : 1, os.str(), ""};
  });
}

}  // namespace orbizeta::cli
