#pragma once

#include <iosfwd>
#include <string>

#include "pentagon/enumeration.hpp"
#include "pentagon/group.hpp"
#include "pentagon/magma.hpp"
#include "pentagon/pairmap.hpp"

namespace pentagon::io {

/// File grammar, shared by both table kinds:
///
///   name <word>     optional, at most once, before n
///   n <int>
///   table           (magma)        dot ... star ...   (pair map)
///   <n rows of n integers each>
///
/// Blank lines and lines starting with '#' are skipped on input; separators
/// may be spaces, tabs, or commas. Serialization is canonical: no comments,
/// single-space separators, every line newline-terminated, the name line
/// present exactly when the name is nonempty. Parse errors carry the
/// 1-based line number.

Magma read_magma(std::istream& in);
Magma read_magma_file(const std::string& path);
void write_magma(std::ostream& out, const Magma& m);
std::string to_string(const Magma& m);

/// write_magma after relabeling the identity to index 0.
void write_group(std::ostream& out, const Group& g);

PairMap read_pairmap(std::istream& in);
PairMap read_pairmap_file(const std::string& path);
void write_pairmap(std::ostream& out, const PairMap& s);
std::string to_string(const PairMap& s);

enum class Format { text, structured };

/// Renders a report. The text form is a summary (counts, per-solution
/// profile flags, classes); the structured form additionally carries every
/// table, one field per line in fixed order. Both are byte-deterministic.
void write_report(std::ostream& out, const EnumerationReport& report, Format format);

}  // namespace pentagon::io
