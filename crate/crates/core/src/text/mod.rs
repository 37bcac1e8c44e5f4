//! Sentence splitting, tokenization, per-sentence features and word vectors.

mod features;
mod resources;
mod segment;

pub use features::{
    cohesion_score, cosine_similarity, embed_sentence, noun_presence, numeric_presence,
    sentence_position_score, sentiment_score, tf_isf_score, Cohesion, FeatureExtractor,
    SentenceFrequency, SentenceRecord, FEATURE_NAMES,
};
pub use resources::{NounLexicon, SentimentLexicon, WordVectors};
pub use segment::{is_numeric, split_sentences, tokenize, word_count};
