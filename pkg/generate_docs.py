"""
Script to generate lattice diagrams for the bundled arrangement corpus.
"""
import logging
from pathlib import Path

from arrangement_homotopy.config import Settings
from arrangement_homotopy.documentation_generator import DocumentationGenerator

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)


def main():
    """Render a Hasse diagram for every corpus arrangement."""
    settings = Settings.from_env()
    logger.info(f"Generating lattice diagrams for {settings.corpus_dir}")
    generator = DocumentationGenerator("docs/assets")
    manifest = generator.generate_corpus_diagrams(settings.corpus_dir)

    print("\nGenerated assets:")
    for name, paths in manifest.items():
        print(f"\n{name}:")
        for path in paths:
            print(f"- {path}")

    if not generator.can_render:
        logger.warning("SVG files were not rendered; install the Graphviz 'dot' executable")
    num_files = len(list(Path("docs/assets").glob('*')))
    logger.info(f"Total files in output directory: {num_files}")


if __name__ == "__main__":
    main()
