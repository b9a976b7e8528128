#pragma once

#include "vscore/ballot.hpp"
#include "vscore/certificate.hpp"
#include "vscore/domain.hpp"
#include "vscore/error.hpp"
#include "vscore/fast_rules.hpp"
#include "vscore/fixtures.hpp"
#include "vscore/forge.hpp"
#include "vscore/generators.hpp"
#include "vscore/io.hpp"
#include "vscore/majority.hpp"
#include "vscore/oracles.hpp"
#include "vscore/selftest.hpp"
