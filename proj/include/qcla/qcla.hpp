#pragma once

#include "adders.hpp"
#include "bits.hpp"
#include "carry_network.hpp"
#include "carry_status.hpp"
#include "circuit.hpp"
#include "comparator.hpp"
#include "formulas.hpp"
#include "generate.hpp"
#include "mersenne.hpp"
#include "resources.hpp"
#include "schedule.hpp"
#include "simulate.hpp"
#include "text_format.hpp"
#include "transform.hpp"
