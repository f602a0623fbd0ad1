#pragma once

#include "adders.hpp"
#include "analysis.hpp"
#include "circuit.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "ladders.hpp"
#include "simulation.hpp"
