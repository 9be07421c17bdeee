#pragma once

/*!
  \file report_json.hpp
  \brief JSON documents for resource reports and formula verification.
*/

#include "formulas.hpp"
#include "resources.hpp"

#include <json.hpp>

namespace qcla
{

inline nlohmann::json to_json( resource_report const& r )
{
  return { { "toffoli_count", r.toffoli_count }, { "cnot_count", r.cnot_count },       { "not_count", r.not_count },
           { "total_slices", r.total_slices },   { "toffoli_slices", r.toffoli_slices }, { "ancilla_count", r.ancilla_count } };
}

/// One record per (variant, n) with expected and measured fields.
inline nlohmann::json to_json( family_report const& rep )
{
  auto records = nlohmann::json::array();
  auto opt = []( std::optional<std::int64_t> const& v ) { return v ? nlohmann::json( *v ) : nlohmann::json( nullptr ); };
  for ( auto const& r : rep.rows )
  {
    nlohmann::json rec{ { "variant", rep.variant },
                        { "n", r.expected.n },
                        { "expected",
                          { { "toffoli", r.expected.toffoli },
                            { "cnot", opt( r.expected.cnot ) },
                            { "not", opt( r.expected.nots ) },
                            { "ancillae", r.expected.ancillae },
                            { "toffoli_depth", r.expected.toffoli_depth },
                            { "toffoli_depth_alt", opt( r.expected.alt_toffoli_depth ) } } },
                        { "measured", to_json( r.measured ) },
                        { "toffoli_exact", r.toffoli_ok() },
                        { "cnot_exact", r.cnot_ok() },
                        { "not_exact", r.not_ok() },
                        { "ancillae_exact", r.ancillae_ok() },
                        { "depth_within_bound", r.depth_ok() },
                        { "depth_exact", r.depth_exact() },
                        { "pass", r.pass() } };
    if ( auto note = r.depth_note(); !note.empty() )
      rec["note"] = note;
    records.push_back( std::move( rec ) );
  }
  return { { "variant", rep.variant }, { "pass", rep.pass() }, { "skipped", rep.skipped }, { "records", records } };
}

} // namespace qcla
