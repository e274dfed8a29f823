// Copyright 2026 The tkmotive Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TKMOTIVE_BIGINT_HPP
#define TKMOTIVE_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tkmotive {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Parses an optionally signed decimal integer; throws std::invalid_argument.
BigInt parse_decimal(const std::string& text);

}  // namespace tkmotive

#endif  // TKMOTIVE_BIGINT_HPP
