// piforge: umbrella header.
#pragma once

#include "checked.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "matroid.hpp"
#include "problem.hpp"
#include "qspace.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "zlinalg.hpp"
