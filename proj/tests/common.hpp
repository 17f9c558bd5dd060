#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tensortopo/cli.hpp"
#include "tensortopo/moncat.hpp"

namespace tt = tensortopo;

#ifndef TT_DATA_DIR
#define TT_DATA_DIR "tests/data"
#endif

inline std::string data_path(const std::string& name) { return std::string(TT_DATA_DIR) + "/" + name; }

inline std::shared_ptr<const tt::MonoidalTable> load(const std::string& name) {
    return std::make_shared<const tt::MonoidalTable>(tt::build(tt::parse_description(data_path(name))));
}

inline std::shared_ptr<const tt::MonoidalTable> share(tt::MonoidalTable m) {
    return std::make_shared<const tt::MonoidalTable>(std::move(m));
}

// Posetal fixtures used across suites.
inline std::vector<std::string> posetal_fixtures() {
    return {"boolean1.json", "boolean2.json", "boolean3.json", "chain2.json", "chain3.json", "frame3.json", "q3.json"};
}

inline bool hom_nonempty(const tt::MonoidalTable& m, tt::Obj a, tt::Obj b) { return !m.base().hom(a, b).empty(); }
