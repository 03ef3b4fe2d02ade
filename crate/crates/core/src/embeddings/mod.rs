//! Word embeddings as term vectors: a small skip-gram trainer with negative
//! sampling, and the textual word2vec format for pretrained vectors.

mod io;
mod neighbors;
mod skipgram;

pub use io::{load_embeddings, save_embeddings, LoadedEmbeddings, WordVectors};
pub use neighbors::{cosine, nearest_neighbors};
pub use skipgram::{train_skipgram, train_skipgram_traced, EmbeddingConfig};
