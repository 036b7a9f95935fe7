#pragma once

#include "photonpath/errors.hpp"
#include "photonpath/foundations.hpp"
#include "photonpath/splitter.hpp"
#include "photonpath/quantum_states.hpp"
#include "photonpath/splitter_quantum.hpp"
#include "photonpath/interferometers.hpp"
#include "photonpath/scattering.hpp"
#include "photonpath/layered_media.hpp"
#include "photonpath/diffraction.hpp"
