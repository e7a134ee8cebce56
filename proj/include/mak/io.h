#ifndef MAK_IO_H_
#define MAK_IO_H_

#include <string>

#include "mak/instance.h"

namespace mak {

// Instance files are JSON:
//   {"items": [{"id": "p1", "cost": 2}, ...],
//    "voters": [{"id": "v1", "utils": [3, 0, ...]}, ...],
//    "budget": 5, "rule": "diverse" | "median" | "best", "lambda": 1,
//    "target": 7,              (optional)
//    "sc_order": ["v2", ...],  (optional, voter ids)
//    "sp_axis": ["p3", ...]}   (optional, item ids)
// Numbers must be integers. Errors are InputError with the line/column of
// syntax errors or the path of the offending field, prefixed by `source`.
Instance ParseInstance(const std::string& text,
                       const std::string& source = "<input>");
std::string SerializeInstance(const Instance& instance);

Instance ReadInstanceFile(const std::string& path);
void WriteInstanceFile(const std::string& path, const Instance& instance);

}  // namespace mak

#endif  // MAK_IO_H_
