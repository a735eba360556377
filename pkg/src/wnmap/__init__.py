"""Linear-time synset mapping between wordnet versions via sense keys."""
# ruff: noqa: F401

from .errors import (
    ConsistencyError,
    DuplicateIli,
    DuplicateKey,
    DuplicateOffset,
    InputError,
    MalformedKey,
    MalformedLine,
    SchemeMismatch,
    WnmapError,
)
from .ingest import (
    ILI,
    OFFSET,
    IliMap,
    LexiconTable,
    SenseIndex,
    SynsetId,
    index_to_ili,
    parse_synset_id,
    read_ili_map,
    read_index_sense,
    read_lexicon_tab,
    write_lexicon_tab,
)
from .mapping import (
    HIGHEST,
    LOWEST,
    ManyMap,
    OneMap,
    build_mapping,
    map_to_many,
    map_to_one,
    read_mapping,
    satellite_supplement,
)
from .metrics import ConfusionCounts, categorize_losses, confusion, detect_key_changes
from .remap import LossReport, merge_census, remap_lexicon
from .sensekey import SenseKey, format_sense_key, key_component_diff, parse_sense_key, pos_of

__version__ = "0.1.0"
