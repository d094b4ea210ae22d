#pragma once

// Text forms of catalog functions used on the command line:
//
//   identity
//   joukowski:<re>[,<im>]
//   laurent:<b>;<b0>;<b1>;<b2>;...        (each field <re>[,<im>])
//   moebius:<a>,<b>,<c>,<d>:<inner>       (real coefficients)
//   moebius:<a>;<b>;<c>;<d>:<inner>       (complex coefficients)
//   hconst | hinvsq:<c> | heven:<h2>;<h4>;... | hlaurent:<h1>;<h2>;...

#include <string>
#include <string_view>

#include "univalence/function_catalog.hpp"

namespace univalence {

/// `re` or `re,im`. Throws InvalidSpec.
cplx parse_complex(std::string_view text);
std::string format_complex(cplx z);

MeromorphicFn parse_function(std::string_view text);
HFunction parse_h_function(std::string_view text);

/// Canonical text that parses back to an identical function.
std::string to_spec_string(const MeromorphicFn& f);
std::string to_spec_string(const HFunction& h);

}  // namespace univalence
