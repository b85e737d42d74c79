#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "maxplus/matrix.hpp"
#include "maxplus/simulation.hpp"
#include "maxplus/switched.hpp"

namespace maxplus {

/*
 * Matrix files:
 *
 *   # optional comment lines
 *   3
 *   2    eps  3
 *   6    2    eps
 *   eps  4    3
 *
 * Tokens are "eps" (any case), "p/q", or integer/decimal literals.
 * Blank lines are ignored. Errors carry 1-based line and column.
 *
 * Schedule files: one "phase <matrix-name> <length>" per line.
 */

Matrix parse_matrix(std::string_view text, const std::string& source = "<matrix>");
Matrix read_matrix_file(const std::filesystem::path& path);

/// Inverse of parse_matrix: exact tokens, one row per line.
std::string format_matrix(const Matrix& a);

Schedule parse_schedule(std::string_view text, const std::string& source = "<schedule>");
Schedule read_schedule_file(const std::filesystem::path& path);
std::string format_schedule(const Schedule& schedule);

/// Comma-separated tokens, e.g. "0,eps,3/2".
Vector parse_vector(std::string_view text);

/// Header "k,matrix,x1,...,xn"; epsilon written as "eps". The matrix column
/// names the matrix the schedule applies at step k.
std::string trace_to_csv(const Trace& trace);

}  // namespace maxplus
