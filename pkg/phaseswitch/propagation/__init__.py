from .coupled_mode import coupled_mode_matrix, eig2x2
from .group_delay import group_delay
from .schema import CoupledModeMatrix, TransferResult, GroupDelayResult
from .spectra import PointFlag, scan_grid, transmission_spectrum, fluorescence_spectrum, populations_spectrum
from .transfer import transfer, transfer_matrix, integrate_transfer
