#ifndef RAMSEY_JSON_IO_HPP
#define RAMSEY_JSON_IO_HPP

#include <string>
#include <string_view>

#include "ramsey/construct.hpp"
#include "ramsey/extremal.hpp"
#include "ramsey/sample_space.hpp"
#include "ramsey/search.hpp"
#include "ramsey/serialize.hpp"

namespace ramsey {

/// "enumeration" | "conditional-expectations" | "prng-fallback"
std::string_view method_name(SearchMethod m);
SearchMethod method_from_name(std::string_view name);

/// Compact single-line JSON. Keys are documented in the README and pinned by
/// golden tests; object keys serialize alphabetically.
std::string to_json(const VerificationReport& r);
std::string to_json(const SampleSpaceSpec& s);
std::string to_json(const SearchOutcome& o);
std::string to_json(const ConstructionParams& p);

/// Full provenance record for a construction run: tool version, resolved
/// parameters, bound check, search outcome and (optional) final verification.
std::string provenance_json(const ConstructionResult& result, Format output_format);

}  // namespace ramsey

#endif
