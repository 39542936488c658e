#pragma once

#include "wsgd/error.hpp"
#include "wsgd/weights.hpp"
#include "wsgd/toeplitz.hpp"
#include "wsgd/operators.hpp"
#include "wsgd/spectral.hpp"
#include "wsgd/problems.hpp"
#include "wsgd/solve1d.hpp"
#include "wsgd/solve2d.hpp"
#include "wsgd/report.hpp"
#include "wsgd/study.hpp"
