#pragma once

#include <string>

#include "cdgalab/formats.hpp"

inline std::string fixture(const std::string& name) { return std::string(CDGALAB_FIXTURES) + "/" + name; }

inline cdgalab::CdgaPtr load_fixture(const std::string& name) { return cdgalab::load_cdga(fixture(name)); }
